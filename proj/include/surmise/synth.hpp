#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "surmise/core.hpp"
#include "surmise/hasse.hpp"
#include "surmise/kst.hpp"

namespace surmise {

/// Ground-truth prerequisite order. covers holds (lower, upper) element
/// indices: lower must be mastered before upper.
struct PlantedPoset {
  std::vector<std::string> elements;
  std::vector<Edge> covers;
  friend bool operator==(const PlantedPoset&, const PlantedPoset&) = default;
};

/// Validates names, rejects self-loops, out-of-range endpoints and cycles.
PlantedPoset make_poset(std::vector<std::string> elements, std::vector<Edge> covers);

struct SynthSpec {
  PlantedPoset poset;
  std::size_t model_count = 1;
  double noise = 0.0;  // per-cell flip probability
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxDownsetElements = 20;

/// Every predecessor-closed subset, ∅ and the full set included. Throws
/// ConstraintError above kMaxDownsetElements elements.
KnowledgeStructure all_downsets(const PlantedPoset& poset);

/// Each model row is a uniformly drawn downset, then each cell is flipped
/// with probability `noise`. Models are named M1..Mm. Same SynthSpec, same table.
JudgmentTable sample_models(const SynthSpec& spec);

/// Elements t0..t{n-1}; each pair i < j is related (i below j) with
/// probability `density`, and the result is transitively reduced.
PlantedPoset random_poset(std::size_t n, double density, std::uint64_t seed);

/// Reflexive-transitive closure of the covers, as a relation on elements.
BoolMatrix poset_order(const PlantedPoset& poset);

}  // namespace surmise
