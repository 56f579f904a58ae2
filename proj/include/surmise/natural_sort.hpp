#pragma once

#include <string_view>

namespace surmise {

/// Natural ordering: digit runs compare by numeric value, so "t2" < "t10".
/// Names equal under that rule fall back to plain byte order, making this a
/// strict total order on distinct strings.
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
  bool operator()(std::string_view a, std::string_view b) const { return natural_less(a, b); }
};

}  // namespace surmise
