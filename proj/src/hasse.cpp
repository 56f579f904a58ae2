#include "surmise/hasse.hpp"

#include <algorithm>
#include <deque>

#include "surmise/error.hpp"
#include "surmise/natural_sort.hpp"

namespace surmise {

std::vector<Edge> covering_edges(const BoolMatrix& rel) {
  const std::size_t n = rel.size();
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r) {
      if (p == r || !rel(p, r)) continue;
      bool implied = false;
      for (std::size_t q = 0; q < n && !implied; ++q)
        implied = q != p && q != r && rel(p, q) && rel(q, r);
      if (!implied) edges.emplace_back(p, r);
    }
  return edges;
}

HasseDiagram transitive_reduction(const OrderMatrix& matrix) {
  if (const auto diag = verify_partial_order(matrix.bits); !diag.ok())
    throw ConstraintError("cannot reduce a relation that is not a partial order: " + diag.describe());

  HasseDiagram d;
  for (const auto& c : matrix.nodes) {
    HasseNode node{c.representative.name, {}};
    for (const auto& m : c.members) node.members.push_back(m.name);
    d.nodes.push_back(std::move(node));
  }
  d.edges = covering_edges(matrix.bits);
  std::sort(d.edges.begin(), d.edges.end(), [&](const Edge& a, const Edge& b) {
    const auto& na = d.nodes;
    if (a.first != b.first) return natural_less(na[a.first].name, na[b.first].name);
    return natural_less(na[a.second].name, na[b.second].name);
  });
  d.layers = assign_layers(d);
  return d;
}

std::vector<std::size_t> assign_layers(std::size_t node_count, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> uppers(node_count);
  std::vector<std::size_t> indegree(node_count, 0);
  for (const auto& [lo, hi] : edges) {
    if (lo >= node_count || hi >= node_count) throw std::out_of_range("edge endpoint out of range");
    uppers[lo].push_back(hi);
    ++indegree[hi];
  }

  std::vector<std::size_t> layer(node_count, 0);
  std::deque<std::size_t> ready;
  for (std::size_t x = 0; x < node_count; ++x)
    if (indegree[x] == 0) ready.push_back(x);
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t x = ready.front();
    ready.pop_front();
    ++visited;
    for (auto y : uppers[x]) {
      layer[y] = std::max(layer[y], layer[x] + 1);
      if (--indegree[y] == 0) ready.push_back(y);
    }
  }
  if (visited != node_count) throw InvariantError("cycle detected while layering Hasse diagram");
  return layer;
}

BoolMatrix transitive_closure(const BoolMatrix& rel) {
  BoolMatrix c = rel;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!c(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (c(k, j)) c.set(i, j, true);
    }
  return c;
}

BoolMatrix edges_to_matrix(std::size_t node_count, const std::vector<Edge>& edges) {
  BoolMatrix m(node_count);
  for (const auto& [a, b] : edges) m.set(a, b, true);
  return m;
}

}  // namespace surmise
