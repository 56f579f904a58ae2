#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "surmise/bitset.hpp"

namespace surmise {

struct TargetId {
  std::size_t index = 0;
  std::string name;
  friend bool operator==(const TargetId&, const TargetId&) = default;
};

struct ModelId {
  std::size_t index = 0;
  std::string name;
  friend bool operator==(const ModelId&, const ModelId&) = default;
};

/// Models × targets correctness matrix. Cell (i, j) is true iff model i
/// judged target j correctly. Immutable once built; see build_table.
class JudgmentTable {
 public:
  std::size_t model_count() const noexcept { return models_.size(); }
  std::size_t target_count() const noexcept { return targets_.size(); }
  const std::vector<ModelId>& models() const noexcept { return models_; }
  const std::vector<TargetId>& targets() const noexcept { return targets_; }

  /// Throws std::out_of_range for bad indices.
  bool tab(std::size_t model, std::size_t target) const;

  /// Models correct on `target`, as a set over model indices.
  const BitSet& column(std::size_t target) const;
  /// Targets judged correctly by `model`, as a set over target indices.
  const BitSet& row(std::size_t model) const;

  /// Index of the target with this name; throws InputError(UnknownTarget).
  std::size_t target_index(std::string_view name) const;

  friend bool operator==(const JudgmentTable&, const JudgmentTable&) = default;

 private:
  friend JudgmentTable build_table(const std::vector<std::string>&, const std::vector<std::string>&,
                                   const std::vector<std::vector<int>>&);

  std::vector<ModelId> models_;
  std::vector<TargetId> targets_;
  std::vector<BitSet> rows_;
  std::vector<BitSet> columns_;
};

/// Validates names and bits and returns the table. `bits[i][j]` is model i's
/// result on target j and must be 0 or 1. Errors are InputError with the
/// offending 1-based grid position.
JudgmentTable build_table(const std::vector<std::string>& target_names,
                          const std::vector<std::string>& model_names,
                          const std::vector<std::vector<int>>& bits);

/// Checks the shared name alphabet (nonempty; no '"', ',', CR or LF).
/// Throws InputError(EmptyName / InvalidName).
void validate_name(std::string_view name, std::string_view what);

/// Model counts for the response patterns 11, 10, 01, 00 on (p, q).
struct PairCounts {
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t n3 = 0;
  std::uint64_t n4 = 0;

  std::uint64_t total() const noexcept { return n1 + n2 + n3 + n4; }
  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

inline bool tab(const JudgmentTable& table, std::size_t model, std::size_t target) {
  return table.tab(model, target);
}

/// Indices of the models that judged `target` correctly, ascending.
std::vector<std::size_t> support(const JudgmentTable& table, std::size_t target);

PairCounts pair_counts(const JudgmentTable& table, std::size_t p, std::size_t q);

/// Tolerated counterexample percentage, held as basis points (1/100 of a
/// percent) so every threshold comparison is exact integer arithmetic.
class Flexibility {
 public:
  static constexpr std::int64_t kLimit = 5000;

  constexpr Flexibility() = default;

  /// Throws ConstraintError unless 0 <= bp < 5000.
  static Flexibility from_basis_points(std::int64_t bp);

  /// Parses a percentage such as "0", "20", "19.99" or "25.5". At most two
  /// fractional digits. Malformed text throws std::invalid_argument; values outside
  /// [0, 50) throw ConstraintError.
  static Flexibility parse(std::string_view percent);

  constexpr std::int64_t basis_points() const noexcept { return bp_; }

  /// Percent with exactly two decimals, e.g. "20.00".
  std::string to_string() const;

  friend constexpr bool operator==(Flexibility, Flexibility) = default;
  friend constexpr auto operator<=>(Flexibility, Flexibility) = default;

 private:
  constexpr explicit Flexibility(std::int64_t bp) : bp_(bp) {}
  std::int64_t bp_ = 0;
};

}  // namespace surmise
