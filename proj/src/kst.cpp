#include "surmise/kst.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "surmise/error.hpp"
#include "surmise/natural_sort.hpp"

namespace surmise {

namespace {

// Position of each ground element in natural name order.
std::vector<std::size_t> natural_ranks(const std::vector<std::string>& names) {
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return natural_less(names[a], names[b]); });
  std::vector<std::size_t> rank(names.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

std::vector<std::size_t> ranked_members(const KnowledgeState& s, const std::vector<std::size_t>& rank) {
  std::vector<std::size_t> out;
  for (auto m : s.members()) out.push_back(rank[m]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

KnowledgeStructure::KnowledgeStructure(std::vector<std::string> ground,
                                       std::vector<KnowledgeState> states, bool completed)
    : ground_(std::move(ground)), completed_(completed) {
  std::set<std::string_view> seen;
  for (std::size_t j = 0; j < ground_.size(); ++j) {
    validate_name(ground_[j], "target");
    if (!seen.insert(ground_[j]).second)
      throw InputError(InputErrorKind::DuplicateTarget,
                       "duplicate target name '" + ground_[j] + "'", std::nullopt, j + 1);
  }
  for (const auto& s : states)
    if (s.universe() != ground_.size())
      throw InputError(InputErrorKind::RaggedRow, "state universe does not match ground set size");
  if (completed_) {
    states.emplace_back(ground_.size());
    states.push_back(BitSet::full(ground_.size()));
  }

  const auto rank = natural_ranks(ground_);
  std::vector<std::pair<std::vector<std::size_t>, KnowledgeState>> keyed;
  keyed.reserve(states.size());
  for (auto& s : states) keyed.emplace_back(ranked_members(s, rank), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  for (auto& [key, s] : keyed) states_.push_back(std::move(s));
}

std::size_t KnowledgeStructure::index_of(std::string_view name) const {
  for (std::size_t j = 0; j < ground_.size(); ++j)
    if (ground_[j] == name) return j;
  throw InputError(InputErrorKind::UnknownTarget, "unknown target '" + std::string(name) + "'");
}

KnowledgeStructure KnowledgeStructure::complete() const {
  return KnowledgeStructure(ground_, states_, true);
}

KnowledgeStructure make_structure(std::vector<std::string> ground,
                                  const std::vector<std::vector<std::string>>& states,
                                  bool completed) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t j = 0; j < ground.size(); ++j) index.emplace(ground[j], j);
  std::vector<KnowledgeState> built;
  for (const auto& names : states) {
    KnowledgeState s(ground.size());
    for (const auto& n : names) {
      auto it = index.find(n);
      if (it == index.end())
        throw InputError(InputErrorKind::UnknownTarget, "state member '" + n + "' not in ground set");
      s.insert(it->second);
    }
    built.push_back(std::move(s));
  }
  return KnowledgeStructure(std::move(ground), std::move(built), completed);
}

KnowledgeStructure structure_from_table(const JudgmentTable& table, bool complete) {
  std::vector<std::string> ground;
  for (const auto& t : table.targets()) ground.push_back(t.name);
  std::vector<KnowledgeState> states;
  for (std::size_t i = 0; i < table.model_count(); ++i) states.push_back(table.row(i));
  return KnowledgeStructure(std::move(ground), std::move(states), complete);
}

std::vector<KnowledgeState> states_containing(const KnowledgeStructure& structure, std::size_t q) {
  if (q >= structure.ground().size()) throw std::out_of_range("target index out of range");
  std::vector<KnowledgeState> out;
  for (const auto& s : structure.states())
    if (s.contains(q)) out.push_back(s);
  return out;
}

std::vector<KnowledgeState> states_containing(const KnowledgeStructure& structure,
                                              std::string_view q) {
  return states_containing(structure, structure.index_of(q));
}

BoolMatrix surmise_from_structure(const KnowledgeStructure& structure) {
  const std::size_t n = structure.ground().size();
  BoolMatrix rel(n);
  for (std::size_t q = 0; q < n; ++q) {
    // ⋂𝒦_q, starting from Q so an empty family yields Q.
    BitSet meet = BitSet::full(n);
    for (const auto& s : structure.states()) {
      if (!s.contains(q)) continue;
      for (std::size_t p = 0; p < n; ++p)
        if (!s.contains(p)) meet.erase(p);
    }
    for (std::size_t p = 0; p < n; ++p) rel.set(p, q, meet.contains(p));
  }
  return rel;
}

ConceptPartition equally_informative(const KnowledgeStructure& structure) {
  const auto& ground = structure.ground();
  const std::size_t n = ground.size();
  const auto& states = structure.states();

  // Signature of q: which states contain it. Equal signatures <=> 𝒦_p = 𝒦_q.
  std::map<BitSet, std::vector<std::size_t>> by_signature;
  for (std::size_t q = 0; q < n; ++q) {
    BitSet sig(states.size());
    for (std::size_t k = 0; k < states.size(); ++k)
      if (states[k].contains(q)) sig.insert(k);
    by_signature[sig].push_back(q);
  }

  ConceptPartition part;
  for (auto& [sig, members] : by_signature) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return natural_less(ground[a], ground[b]);
    });
    part.blocks.push_back({members.front(), members});
  }
  std::sort(part.blocks.begin(), part.blocks.end(), [&](const Concept& a, const Concept& b) {
    return natural_less(ground[a.representative], ground[b.representative]);
  });
  part.block_of.assign(n, 0);
  for (std::size_t b = 0; b < part.blocks.size(); ++b)
    for (auto m : part.blocks[b].members) part.block_of[m] = b;
  return part;
}

KnowledgeStructure discriminative_reduction(const KnowledgeStructure& structure) {
  const auto part = equally_informative(structure);
  std::vector<std::string> ground;
  for (const auto& c : part.blocks) ground.push_back(structure.ground()[c.representative]);
  std::vector<KnowledgeState> states;
  for (const auto& s : structure.states()) {
    KnowledgeState reduced(part.blocks.size());
    for (auto m : s.members()) reduced.insert(part.block_of[m]);
    states.push_back(std::move(reduced));
  }
  return KnowledgeStructure(std::move(ground), std::move(states), structure.completed());
}

bool is_discriminative(const KnowledgeStructure& structure) {
  return equally_informative(structure).blocks.size() == structure.ground().size();
}

}  // namespace surmise
