#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "surmise/error.hpp"
#include "surmise/kst.hpp"
#include "surmise/order.hpp"

using namespace surmise;

namespace {

using NameSet = std::set<std::string>;

NameSet names_of(const KnowledgeStructure& s, const KnowledgeState& k) {
  NameSet out;
  for (auto m : k.members()) out.insert(s.ground()[m]);
  return out;
}

std::set<NameSet> family(const KnowledgeStructure& s, const std::vector<KnowledgeState>& ks) {
  std::set<NameSet> out;
  for (const auto& k : ks) out.insert(names_of(s, k));
  return out;
}

std::set<std::pair<std::string, std::string>> strict_pairs(const KnowledgeStructure& s,
                                                           const BoolMatrix& rel) {
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t p = 0; p < rel.size(); ++p)
    for (std::size_t q = 0; q < rel.size(); ++q)
      if (p != q && rel(p, q)) out.insert({s.ground()[p], s.ground()[q]});
  return out;
}

std::vector<std::set<std::size_t>> index_states(const KnowledgeStructure& s) {
  std::vector<std::set<std::size_t>> out;
  for (const auto& k : s.states()) {
    auto m = k.members();
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

KnowledgeStructure random_structure(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + rng() % 6;
  std::vector<std::string> ground;
  for (std::size_t j = 0; j < n; ++j) ground.push_back("q" + std::to_string(j));
  std::vector<KnowledgeState> states;
  const std::size_t count = rng() % 10;
  for (std::size_t k = 0; k < count; ++k) {
    KnowledgeState s(n);
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 2) s.insert(j);
    states.push_back(s);
  }
  return KnowledgeStructure(ground, states, rng() % 2 == 0);
}

}  // namespace

TEST_CASE("states_containing reproduces the worked example") {
  const auto s = fixtures::example_structure();
  const NameSet Q{"a", "b", "c", "d", "e"};
  CHECK(family(s, states_containing(s, "a")) ==
        std::set<NameSet>{{"a", "b", "c"}, {"a", "b", "c", "d"}, {"a", "b", "c", "e"}, Q});
  const std::set<NameSet> kb{
      {"b", "c"}, {"a", "b", "c"}, {"a", "b", "c", "d"}, {"a", "b", "c", "e"}, Q};
  CHECK(family(s, states_containing(s, "b")) == kb);
  CHECK(family(s, states_containing(s, "c")) == kb);
  CHECK(family(s, states_containing(s, "d")) == std::set<NameSet>{{"a", "b", "c", "d"}, Q});
  CHECK(family(s, states_containing(s, "e")) == std::set<NameSet>{{"a", "b", "c", "e"}, Q});
  CHECK_THROWS_AS(states_containing(s, "z"), InputError);

  const auto lonely = make_structure({"a", "b"}, {{"a"}});
  CHECK(states_containing(lonely, "b").empty());
}

TEST_CASE("surmise relation of the worked example") {
  const auto s = fixtures::example_structure();
  const auto rel = surmise_from_structure(s);
  const std::set<std::pair<std::string, std::string>> expected{
      {"b", "a"}, {"c", "a"}, {"b", "c"}, {"c", "b"}, {"a", "d"},
      {"b", "d"}, {"c", "d"}, {"a", "e"}, {"b", "e"}, {"c", "e"}};
  CHECK(strict_pairs(s, rel) == expected);
  for (std::size_t p = 0; p < 5; ++p) CHECK(rel(p, p));

  const auto brute = oracle::surmise(5, index_states(s));
  for (std::size_t p = 0; p < 5; ++p)
    for (std::size_t q = 0; q < 5; ++q) CHECK(rel(p, q) == brute[p][q]);
}

TEST_CASE("surmise relation extremes") {
  SUBCASE("{∅, Q} relates everything") {
    const auto s = make_structure({"a", "b", "c"}, {{}, {"a", "b", "c"}});
    CHECK(surmise_from_structure(s).count() == 9);
  }
  SUBCASE("power set relates nothing beyond the diagonal") {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<std::string> ground;
      for (std::size_t j = 0; j < n; ++j) ground.push_back(std::string(1, static_cast<char>('a' + j)));
      std::vector<KnowledgeState> states;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        KnowledgeState k(n);
        for (std::size_t j = 0; j < n; ++j)
          if ((mask >> j) & 1U) k.insert(j);
        states.push_back(k);
      }
      const KnowledgeStructure s(ground, states);
      CHECK(s.states().size() == (std::size_t{1} << n));
      CHECK(surmise_from_structure(s) == BoolMatrix::identity(n));
    }
  }
  SUBCASE("a target in no state surmises the whole ground set") {
    const auto s = make_structure({"a", "b"}, {{"a"}});
    const auto rel = surmise_from_structure(s);
    CHECK(rel(0, 1));
    CHECK(rel(1, 1));
    CHECK_FALSE(rel(1, 0));
  }
}

TEST_CASE("equally informative targets") {
  const auto s = fixtures::example_structure();
  const auto part = equally_informative(s);
  REQUIRE(part.blocks.size() == 4);
  CHECK(part.blocks[0].members == std::vector<std::size_t>{0});
  CHECK(part.blocks[1].members == std::vector<std::size_t>{1, 2});
  CHECK(part.blocks[1].representative == 1);
  CHECK(part.blocks[2].members == std::vector<std::size_t>{3});
  CHECK(part.blocks[3].members == std::vector<std::size_t>{4});
  CHECK(part.block_of[2] == 1);

  const auto t4 = structure_from_table(fixtures::table4(), true);
  const auto p4 = equally_informative(t4);
  CHECK(p4.blocks.size() == 9);
  CHECK(p4.blocks[0].members == std::vector<std::size_t>{0, 1});

  const auto distinct = make_structure({"a", "b"}, {{}, {"a"}, {"a", "b"}});
  CHECK(equally_informative(distinct).blocks.size() == 2);
}

TEST_CASE("discriminative reduction") {
  const auto s = fixtures::example_structure();
  CHECK_FALSE(is_discriminative(s));
  const auto r = discriminative_reduction(s);
  CHECK(r.ground() == std::vector<std::string>{"a", "b", "d", "e"});
  CHECK(family(r, r.states()) == std::set<NameSet>{{},
                                                   {"b"},
                                                   {"a", "b"},
                                                   {"a", "b", "d"},
                                                   {"a", "b", "e"},
                                                   {"a", "b", "d", "e"}});
  CHECK(r.states().size() == 6);
  CHECK(is_discriminative(r));

  const auto already = make_structure({"a", "b"}, {{}, {"a"}, {"a", "b"}});
  CHECK(discriminative_reduction(already).states().size() == already.states().size());
  CHECK(discriminative_reduction(already) == already);

  const auto pair = make_structure({"a", "b"}, {{}, {"a", "b"}});
  const auto pr = discriminative_reduction(pair);
  CHECK(pr.ground() == std::vector<std::string>{"a"});
  CHECK(family(pr, pr.states()) == std::set<NameSet>{{}, {"a"}});

  CHECK(is_discriminative(make_structure({"x"}, {{"x"}})));
}

TEST_CASE("structure_from_table") {
  const auto t = fixtures::table4();
  const auto raw = structure_from_table(t, false);
  CHECK(raw.states().size() == 12);
  CHECK_FALSE(raw.completed());
  const auto full = structure_from_table(t, true);
  CHECK(full.states().size() == 14);
  CHECK(full.completed());
  CHECK(full.states().front().empty());
  CHECK(full.states().back().count() == 10);

  const auto one = structure_from_table(build_table({"a", "b"}, {"M1"}, {{1, 1}}), true);
  CHECK(family(one, one.states()) == std::set<NameSet>{{}, {"a", "b"}});

  const auto dup = structure_from_table(build_table({"a", "b"}, {"M1", "M2"}, {{1, 0}, {1, 0}}), false);
  CHECK(dup.states().size() == 1);
}

TEST_CASE("structure constructor validation") {
  CHECK_THROWS_AS(KnowledgeStructure({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(KnowledgeStructure({"a"}, {KnowledgeState(2)}), InputError);
  CHECK_THROWS_AS(make_structure({"a"}, {{"b"}}), InputError);
}

TEST_CASE("surmise relation properties on random structures") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto s = random_structure(seed);
    const std::size_t n = s.ground().size();
    const auto rel = surmise_from_structure(s);

    const auto brute = oracle::surmise(n, index_states(s));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) REQUIRE(rel(p, q) == brute[p][q]);

    // quasi-order
    for (std::size_t p = 0; p < n; ++p) REQUIRE(rel(p, p));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r)
          if (rel(p, q) && rel(q, r)) REQUIRE(rel(p, r));

    if (is_discriminative(s))
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (p != q) REQUIRE_FALSE((rel(p, q) && rel(q, p)));

    // completion does not change the relation among targets that occur in a state
    const auto completed_rel = surmise_from_structure(s.complete());
    for (std::size_t q = 0; q < n; ++q) {
      if (states_containing(s, q).empty()) continue;
      for (std::size_t p = 0; p < n; ++p) REQUIRE(rel(p, q) == completed_rel(p, q));
    }

    REQUIRE(is_discriminative(discriminative_reduction(s)));
  }
}

TEST_CASE("table-derived surmise equals the zero-flexibility order") {
  for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
    const auto g = oracle::random_grid(seed);
    const auto t = build_table(g.targets, g.models, g.bits);
    const auto rel = surmise_from_structure(structure_from_table(t, true));
    const auto ord = order_matrix(t, Flexibility{});
    const auto classes = equivalence_classes(t, Flexibility{});
    for (std::size_t p = 0; p < g.u(); ++p)
      for (std::size_t q = 0; q < g.u(); ++q)
        REQUIRE(rel(p, q) == ord.bits(classes.block_of[p], classes.block_of[q]));
  }
}
