#include "surmise/synth.hpp"

#include <cmath>
#include <random>
#include <set>

#include "surmise/error.hpp"

namespace surmise {

namespace {

// Top 53 bits of the engine output as a double in [0, 1). The engine's
// output sequence is fixed by the standard, unlike std::*_distribution.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr std::uint64_t kNoiseStream = 0x9e3779b97f4a7c15ULL;

std::vector<std::uint32_t> downset_masks(const PlantedPoset& poset) {
  const std::size_t n = poset.elements.size();
  if (n > kMaxDownsetElements)
    throw ConstraintError("downset enumeration limited to " + std::to_string(kMaxDownsetElements) +
                          " elements, got " + std::to_string(n));
  std::vector<std::uint32_t> preds(n, 0);
  for (const auto& [lo, hi] : poset.covers) preds[hi] |= std::uint32_t{1} << lo;

  std::vector<std::uint32_t> out;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x)
      if ((mask >> x) & 1U) closed = (preds[x] & ~mask) == 0;
    if (closed) out.push_back(mask);
  }
  return out;
}

}  // namespace

PlantedPoset make_poset(std::vector<std::string> elements, std::vector<Edge> covers) {
  std::set<std::string_view> seen;
  for (const auto& e : elements) {
    validate_name(e, "element");
    if (!seen.insert(e).second)
      throw InputError(InputErrorKind::DuplicateTarget, "duplicate element name '" + e + "'");
  }
  for (const auto& [lo, hi] : covers) {
    if (lo >= elements.size() || hi >= elements.size())
      throw std::out_of_range("cover endpoint out of range");
    if (lo == hi) throw ConstraintError("self-loop on element '" + elements[lo] + "'");
  }
  try {
    assign_layers(elements.size(), covers);
  } catch (const InvariantError&) {
    throw ConstraintError("planted covers contain a cycle");
  }
  return PlantedPoset{std::move(elements), std::move(covers)};
}

KnowledgeStructure all_downsets(const PlantedPoset& poset) {
  const std::size_t n = poset.elements.size();
  std::vector<KnowledgeState> states;
  for (auto mask : downset_masks(poset)) {
    KnowledgeState s(n);
    for (std::size_t x = 0; x < n; ++x)
      if ((mask >> x) & 1U) s.insert(x);
    states.push_back(std::move(s));
  }
  return KnowledgeStructure(poset.elements, std::move(states), true);
}

JudgmentTable sample_models(const SynthSpec& spec) {
  if (spec.model_count == 0) throw ConstraintError("model count must be positive");
  if (!(spec.noise >= 0.0 && spec.noise <= 1.0))
    throw ConstraintError("noise must be a probability in [0, 1]");

  const auto masks = downset_masks(spec.poset);
  const std::size_t n = spec.poset.elements.size();
  std::mt19937_64 pick(spec.seed);
  std::mt19937_64 flip(spec.seed ^ kNoiseStream);

  std::vector<std::string> models;
  std::vector<std::vector<int>> bits;
  for (std::size_t i = 0; i < spec.model_count; ++i) {
    models.push_back("M" + std::to_string(i + 1));
    const std::uint32_t mask = masks[pick() % masks.size()];
    std::vector<int> row(n);
    for (std::size_t x = 0; x < n; ++x) {
      int bit = static_cast<int>((mask >> x) & 1U);
      if (spec.noise > 0.0 && unit_interval(flip) < spec.noise) bit ^= 1;
      row[x] = bit;
    }
    bits.push_back(std::move(row));
  }
  return build_table(spec.poset.elements, models, bits);
}

PlantedPoset random_poset(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw ConstraintError("poset needs at least one element");
  if (!(density >= 0.0 && density <= 1.0))
    throw ConstraintError("density must be a probability in [0, 1]");

  std::mt19937_64 rng(seed);
  BoolMatrix rel = BoolMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unit_interval(rng) < density) rel.set(i, j, true);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
  return make_poset(std::move(names), covering_edges(transitive_closure(rel)));
}

BoolMatrix poset_order(const PlantedPoset& poset) {
  BoolMatrix rel = edges_to_matrix(poset.elements.size(), poset.covers);
  for (std::size_t i = 0; i < rel.size(); ++i) rel.set(i, i, true);
  return transitive_closure(rel);
}

}  // namespace surmise
