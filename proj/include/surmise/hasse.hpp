#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "surmise/bool_matrix.hpp"
#include "surmise/order.hpp"

namespace surmise {

/// (lower, upper) node indices: lower is the prerequisite, drawn below upper.
using Edge = std::pair<std::size_t, std::size_t>;

struct HasseNode {
  std::string name;                  // class representative
  std::vector<std::string> members;  // natural order, includes name
  friend bool operator==(const HasseNode&, const HasseNode&) = default;
};

struct HasseDiagram {
  std::vector<HasseNode> nodes;
  std::vector<Edge> edges;          // sorted by (lower name, upper name)
  std::vector<std::size_t> layers;  // per node
  friend bool operator==(const HasseDiagram&, const HasseDiagram&) = default;
};

/// Covering pairs of a partial order: (p, r) with p != r, rel(p, r), and no
/// q outside {p, r} such that rel(p, q) and rel(q, r). Sorted by index.
std::vector<Edge> covering_edges(const BoolMatrix& relation);

/// Hasse diagram of an order matrix, layers included. Throws ConstraintError
/// if the matrix is not a partial order.
HasseDiagram transitive_reduction(const OrderMatrix& matrix);

/// Longest-path layering: nodes with no lower neighbour sit on layer 0,
/// every other node one above its highest lower neighbour. Throws
/// InvariantError when the edges contain a cycle.
std::vector<std::size_t> assign_layers(std::size_t node_count, const std::vector<Edge>& edges);
inline std::vector<std::size_t> assign_layers(const HasseDiagram& diagram) {
  return assign_layers(diagram.nodes.size(), diagram.edges);
}

/// Warshall closure: smallest transitive superset.
BoolMatrix transitive_closure(const BoolMatrix& relation);

BoolMatrix edges_to_matrix(std::size_t node_count, const std::vector<Edge>& edges);

}  // namespace surmise
