#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "surmise/bool_matrix.hpp"
#include "surmise/core.hpp"

namespace surmise {

/// One class of mutually ordered targets. Members are in natural name order;
/// the representative is the last of them (t1 stands for {t0, t1}).
struct TargetClass {
  TargetId representative;
  std::vector<TargetId> members;
  friend bool operator==(const TargetClass&, const TargetClass&) = default;
};

struct EquivalenceClasses {
  std::vector<TargetClass> blocks;    // ordered by representative name
  std::vector<std::size_t> block_of;  // target index -> block index
  friend bool operator==(const EquivalenceClasses&, const EquivalenceClasses&) = default;
};

/// Flexible order over class representatives: bits(a, b) means node a is
/// surmised from node b (a is the prerequisite, drawn below b).
struct OrderMatrix {
  std::vector<TargetClass> nodes;
  BoolMatrix bits;
  friend bool operator==(const OrderMatrix&, const OrderMatrix&) = default;
};

/// p ↪ q: same target, or no discordant models, or
/// n3 / (n2 + n3) * 100 <= m, evaluated as 10000·n3 <= bp·(n2 + n3).
bool flexible_leq(const PairCounts& counts, Flexibility alpha, bool same_target);

/// Partition by mutual flexible order. `threads` > 1 spreads the pairwise
/// counting; results do not depend on it.
EquivalenceClasses equivalence_classes(const JudgmentTable& table, Flexibility alpha,
                                       unsigned threads = 1);

/// Ord over the representatives of equivalence_classes. Throws InvariantError
/// if the result is not a partial order.
OrderMatrix order_matrix(const JudgmentTable& table, Flexibility alpha, unsigned threads = 1);

struct AxiomCheck {
  bool passed = true;
  std::vector<std::size_t> witness;  // offending pair or triple on failure
};

struct OrderDiagnostics {
  AxiomCheck reflexive;
  AxiomCheck antisymmetric;
  AxiomCheck transitive;

  bool ok() const noexcept { return reflexive.passed && antisymmetric.passed && transitive.passed; }
  std::string describe() const;
};

OrderDiagnostics verify_partial_order(const BoolMatrix& relation);
inline OrderDiagnostics verify_partial_order(const OrderMatrix& matrix) {
  return verify_partial_order(matrix.bits);
}

}  // namespace surmise
