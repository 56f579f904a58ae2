#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "surmise/bitset.hpp"
#include "surmise/bool_matrix.hpp"
#include "surmise/core.hpp"

namespace surmise {

/// A knowledge state is a subset of the ground set, indexed by ground position.
using KnowledgeState = BitSet;

/// Finite family of distinct knowledge states over an ordered ground set.
///
/// States are deduplicated and kept in canonical order: by cardinality, then
/// by their members' names compared in natural order. `completed()` records
/// whether the family was closed under adding the empty set and the full set.
class KnowledgeStructure {
 public:
  KnowledgeStructure() = default;

  /// With `completed`, ∅ and Q are added when absent. Throws InputError on
  /// invalid or duplicate names, or a state whose universe differs from the
  /// ground set size.
  KnowledgeStructure(std::vector<std::string> ground, std::vector<KnowledgeState> states,
                     bool completed = false);

  const std::vector<std::string>& ground() const noexcept { return ground_; }
  const std::vector<KnowledgeState>& states() const noexcept { return states_; }
  bool completed() const noexcept { return completed_; }

  std::size_t index_of(std::string_view name) const;

  /// Same family with ∅ and Q added where absent.
  KnowledgeStructure complete() const;

  friend bool operator==(const KnowledgeStructure&, const KnowledgeStructure&) = default;

 private:
  std::vector<std::string> ground_;
  std::vector<KnowledgeState> states_;
  bool completed_ = false;
};

/// Builds a structure from member names, e.g. {{}, {"b","c"}, ...}.
KnowledgeStructure make_structure(std::vector<std::string> ground,
                                  const std::vector<std::vector<std::string>>& states,
                                  bool completed = false);

/// Distinct rows of the table as target subsets; with `complete`, ∅ and Q
/// are added when absent.
KnowledgeStructure structure_from_table(const JudgmentTable& table, bool complete);

/// 𝒦_q: every state containing q.
std::vector<KnowledgeState> states_containing(const KnowledgeStructure& structure, std::size_t q);
std::vector<KnowledgeState> states_containing(const KnowledgeStructure& structure,
                                              std::string_view q);

/// Surmise relation over ground indices: result(p, q) iff p belongs to every
/// state containing q. A target found in no state surmises the whole ground set.
BoolMatrix surmise_from_structure(const KnowledgeStructure& structure);

struct Concept {
  std::size_t representative = 0;    // ground index
  std::vector<std::size_t> members;  // ground indices, natural order by name
};

/// Partition of the ground set into concepts (equally informative classes).
/// Blocks are ordered by their representative's name.
struct ConceptPartition {
  std::vector<Concept> blocks;
  std::vector<std::size_t> block_of;  // ground index -> block index
};

/// Concept representative: the member with the natural-order smallest name.
ConceptPartition equally_informative(const KnowledgeStructure& structure);

/// Quotient structure over concept representatives (ground names are the
/// representatives' names).
KnowledgeStructure discriminative_reduction(const KnowledgeStructure& structure);

bool is_discriminative(const KnowledgeStructure& structure);

}  // namespace surmise
