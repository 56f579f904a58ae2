#include "surmise/natural_sort.hpp"

#include <cctype>
#include <cstddef>

namespace surmise {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// -1, 0, 1 for digit runs starting at a[i], b[j]; advances both indices.
int compare_numbers(std::string_view a, std::size_t& i, std::string_view b, std::size_t& j) {
  while (i < a.size() && a[i] == '0' && i + 1 < a.size() && is_digit(a[i + 1])) ++i;
  while (j < b.size() && b[j] == '0' && j + 1 < b.size() && is_digit(b[j + 1])) ++j;
  std::size_t ei = i, ej = j;
  while (ei < a.size() && is_digit(a[ei])) ++ei;
  while (ej < b.size() && is_digit(b[ej])) ++ej;
  int result = 0;
  if (ei - i != ej - j) {
    result = (ei - i) < (ej - j) ? -1 : 1;
  } else {
    auto c = a.substr(i, ei - i).compare(b.substr(j, ej - j));
    result = c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  i = ei;
  j = ej;
  return result;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      if (int c = compare_numbers(a, i, b, j); c != 0) return c < 0;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
    ++i;
    ++j;
  }
  if ((i < a.size()) != (j < b.size())) return i >= a.size();
  return a < b;
}

}  // namespace surmise
