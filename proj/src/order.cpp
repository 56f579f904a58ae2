#include "surmise/order.hpp"

#include <algorithm>
#include <numeric>

#include "surmise/error.hpp"
#include "surmise/natural_sort.hpp"
#include "surmise/parallel.hpp"

namespace surmise {

bool flexible_leq(const PairCounts& counts, Flexibility alpha, bool same_target) {
  if (same_target) return true;
  const std::uint64_t discordant = counts.n2 + counts.n3;
  if (discordant == 0) return true;
  // Counts are bounded by the model count, far below 2^64 / 10^4.
  const auto bp = static_cast<std::uint64_t>(alpha.basis_points());
  return counts.n3 * 10000U <= bp * discordant;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

EquivalenceClasses equivalence_classes(const JudgmentTable& table, Flexibility alpha,
                                       unsigned threads) {
  const std::size_t u = table.target_count();

  // mutual[p] lists q > p with p ↪ q and q ↪ p.
  std::vector<std::vector<std::size_t>> mutual(u);
  detail::parallel_for(u, threads, [&](std::size_t p) {
    for (std::size_t q = p + 1; q < u; ++q) {
      const PairCounts c = pair_counts(table, p, q);
      const PairCounts r{c.n1, c.n3, c.n2, c.n4};
      if (flexible_leq(c, alpha, false) && flexible_leq(r, alpha, false)) mutual[p].push_back(q);
    }
  });

  std::vector<std::size_t> parent(u);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t p = 0; p < u; ++p)
    for (auto q : mutual[p]) parent[find_root(parent, q)] = find_root(parent, p);

  std::vector<std::vector<std::size_t>> groups(u);
  for (std::size_t j = 0; j < u; ++j) groups[find_root(parent, j)].push_back(j);

  const auto& targets = table.targets();
  auto by_name = [&](std::size_t a, std::size_t b) {
    return natural_less(targets[a].name, targets[b].name);
  };
  EquivalenceClasses classes;
  for (auto& g : groups) {
    if (g.empty()) continue;
    std::sort(g.begin(), g.end(), by_name);
    TargetClass c;
    c.representative = targets[g.back()];
    for (auto j : g) c.members.push_back(targets[j]);
    classes.blocks.push_back(std::move(c));
  }
  std::sort(classes.blocks.begin(), classes.blocks.end(),
            [](const TargetClass& a, const TargetClass& b) {
              return natural_less(a.representative.name, b.representative.name);
            });
  classes.block_of.assign(u, 0);
  for (std::size_t b = 0; b < classes.blocks.size(); ++b)
    for (const auto& m : classes.blocks[b].members) classes.block_of[m.index] = b;
  return classes;
}

OrderMatrix order_matrix(const JudgmentTable& table, Flexibility alpha, unsigned threads) {
  auto classes = equivalence_classes(table, alpha, threads);
  const std::size_t k = classes.blocks.size();
  OrderMatrix out{std::move(classes.blocks), BoolMatrix(k)};

  std::vector<std::vector<std::uint8_t>> rows(k, std::vector<std::uint8_t>(k, 0));
  detail::parallel_for(k, threads, [&](std::size_t a) {
    const std::size_t p = out.nodes[a].representative.index;
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t q = out.nodes[b].representative.index;
      rows[a][b] = flexible_leq(pair_counts(table, p, q), alpha, a == b) ? 1 : 0;
    }
  });
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) out.bits.set(a, b, rows[a][b] != 0);

  if (const auto diag = verify_partial_order(out.bits); !diag.ok())
    throw InvariantError("flexible order is not a partial order: " + diag.describe());
  return out;
}

OrderDiagnostics verify_partial_order(const BoolMatrix& rel) {
  OrderDiagnostics d;
  const std::size_t n = rel.size();
  for (std::size_t a = 0; a < n && d.reflexive.passed; ++a)
    if (!rel(a, a)) d.reflexive = {false, {a}};
  for (std::size_t a = 0; a < n && d.antisymmetric.passed; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rel(a, b) && rel(b, a)) {
        d.antisymmetric = {false, {a, b}};
        break;
      }
  for (std::size_t a = 0; a < n && d.transitive.passed; ++a)
    for (std::size_t b = 0; b < n && d.transitive.passed; ++b) {
      if (!rel(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (rel(b, c) && !rel(a, c)) {
          d.transitive = {false, {a, b, c}};
          break;
        }
    }
  return d;
}

std::string OrderDiagnostics::describe() const {
  auto line = [](const char* name, const AxiomCheck& c) {
    std::string s = std::string(name) + (c.passed ? ": pass" : ": FAIL");
    if (!c.passed) {
      s += " (";
      for (std::size_t k = 0; k < c.witness.size(); ++k)
        s += (k ? ", " : "") + std::to_string(c.witness[k]);
      s += ")";
    }
    return s;
  };
  return line("reflexive", reflexive) + "; " + line("antisymmetric", antisymmetric) + "; " +
         line("transitive", transitive);
}

}  // namespace surmise
