#include "surmise/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "surmise/natural_sort.hpp"

namespace surmise {

using ordered_json = nlohmann::ordered_json;

Analysis analyze(const JudgmentTable& table, Flexibility alpha, bool with_counts,
                 unsigned threads) {
  Analysis a{order_matrix(table, alpha, threads), {}, {}};
  a.diagram = transitive_reduction(a.order);

  AnalysisReport& r = a.report;
  for (const auto& t : table.targets()) r.targets.push_back(t.name);
  std::sort(r.targets.begin(), r.targets.end(), NaturalLess{});
  r.flexibility = alpha;

  const auto& nodes = a.order.nodes;
  for (const auto& c : nodes) {
    ClassEntry e{c.representative.name, {}};
    for (const auto& m : c.members) e.members.push_back(m.name);
    r.classes.push_back(std::move(e));
  }
  // Nodes are in natural order already, so index order is name order.
  for (std::size_t p = 0; p < nodes.size(); ++p)
    for (std::size_t q = 0; q < nodes.size(); ++q)
      if (p != q && a.order.bits(p, q))
        r.relation.push_back({nodes[p].representative.name, nodes[q].representative.name});
  for (const auto& [lo, hi] : a.diagram.edges)
    r.hasse.push_back({a.diagram.nodes[lo].name, a.diagram.nodes[hi].name});

  std::size_t depth = 0;
  for (auto l : a.diagram.layers) depth = std::max(depth, l + 1);
  r.layers.assign(depth, {});
  for (std::size_t x = 0; x < a.diagram.nodes.size(); ++x)
    r.layers[a.diagram.layers[x]].push_back(a.diagram.nodes[x].name);

  if (with_counts) {
    std::vector<CountsEntry> counts;
    for (std::size_t p = 0; p < nodes.size(); ++p)
      for (std::size_t q = 0; q < nodes.size(); ++q)
        if (p != q)
          counts.push_back({nodes[p].representative.name, nodes[q].representative.name,
                            pair_counts(table, nodes[p].representative.index,
                                        nodes[q].representative.index)});
    r.counts = std::move(counts);
  }
  return a;
}

namespace {

ordered_json edge_array(const std::vector<NamedEdge>& edges) {
  auto arr = ordered_json::array();
  for (const auto& e : edges) arr.push_back(ordered_json::array({e.lower, e.upper}));
  return arr;
}

std::string report_json(const AnalysisReport& r) {
  ordered_json j;
  j["targets"] = r.targets;
  j["flexibility"] = {{"percent", r.flexibility.to_string()},
                      {"basis_points", r.flexibility.basis_points()}};
  auto classes = ordered_json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"representative", c.representative}, {"members", c.members}});
  j["classes"] = std::move(classes);
  j["relation"] = edge_array(r.relation);
  j["hasse"] = edge_array(r.hasse);
  j["layers"] = r.layers;
  if (r.counts) {
    auto counts = ordered_json::array();
    for (const auto& c : *r.counts)
      counts.push_back({{"p", c.p},
                        {"q", c.q},
                        {"n1", c.counts.n1},
                        {"n2", c.counts.n2},
                        {"n3", c.counts.n3},
                        {"n4", c.counts.n4}});
    j["counts"] = std::move(counts);
  }
  return j.dump(2) + "\n";
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "targets: " << join(r.targets, " ") << "\n";
  os << "flexibility: " << r.flexibility.to_string() << "% (" << r.flexibility.basis_points()
     << " bp)\n";
  os << "classes:\n";
  for (const auto& c : r.classes)
    os << "  " << c.representative << " = {" << join(c.members, ", ") << "}\n";
  os << "relation:\n";
  for (const auto& e : r.relation) os << "  " << e.lower << " -> " << e.upper << "\n";
  os << "hasse:\n";
  for (const auto& e : r.hasse) os << "  " << e.lower << " -> " << e.upper << "\n";
  os << "layers:\n";
  for (std::size_t l = 0; l < r.layers.size(); ++l)
    os << "  " << l << ": " << join(r.layers[l], " ") << "\n";
  if (r.counts) {
    os << "counts:\n";
    for (const auto& c : *r.counts)
      os << "  " << c.p << " " << c.q << ": n1=" << c.counts.n1 << " n2=" << c.counts.n2
         << " n3=" << c.counts.n3 << " n4=" << c.counts.n4 << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
  return format == ReportFormat::Json ? report_json(report) : report_text(report);
}

namespace {

std::vector<std::size_t> nodes_by_name(const HasseDiagram& d) {
  std::vector<std::size_t> order(d.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return natural_less(d.nodes[a].name, d.nodes[b].name); });
  return order;
}

std::vector<Edge> edges_by_name(const HasseDiagram& d) {
  auto edges = d.edges;
  std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    if (a.first != b.first) return natural_less(d.nodes[a.first].name, d.nodes[b.first].name);
    return natural_less(d.nodes[a.second].name, d.nodes[b.second].name);
  });
  return edges;
}

}  // namespace

std::string emit_dot(const HasseDiagram& d) {
  std::string out = "digraph hierarchy {\n  rankdir=BT;\n";
  for (auto x : nodes_by_name(d)) {
    const auto& node = d.nodes[x];
    std::vector<std::string> others;
    for (const auto& m : node.members)
      if (m != node.name) others.push_back(m);
    std::string label = node.name;
    if (!others.empty()) label += " (=" + join(others, ", ") + ")";
    out += "  \"" + node.name + "\" [label=\"" + label + "\"];\n";
  }
  for (const auto& [lo, hi] : edges_by_name(d))
    out += "  \"" + d.nodes[lo].name + "\" -> \"" + d.nodes[hi].name + "\";\n";
  out += "}\n";
  return out;
}

std::string emit_hasse_json(const HasseDiagram& d) {
  ordered_json j;
  auto nodes = ordered_json::array();
  for (auto x : nodes_by_name(d))
    nodes.push_back({{"name", d.nodes[x].name},
                     {"members", d.nodes[x].members},
                     {"layer", x < d.layers.size() ? d.layers[x] : 0}});
  j["nodes"] = std::move(nodes);
  auto edges = ordered_json::array();
  for (const auto& [lo, hi] : edges_by_name(d))
    edges.push_back(ordered_json::array({d.nodes[lo].name, d.nodes[hi].name}));
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

namespace {

std::string format_state(const KnowledgeState& s, const std::vector<std::string>& ground,
                         const char* suffix) {
  std::vector<std::string> names;
  for (auto m : s.members()) names.push_back(ground[m] + suffix);
  std::sort(names.begin(), names.end(), NaturalLess{});
  return "{" + join(names, ", ") + "}";
}

void write_states(std::ostringstream& os, const KnowledgeStructure& s, const char* indent,
                  const char* suffix) {
  os << indent << "ground: " << format_state(BitSet::full(s.ground().size()), s.ground(), suffix)
     << "\n";
  os << indent << "states: " << s.states().size() << "\n";
  for (const auto& k : s.states()) os << indent << "  " << format_state(k, s.ground(), suffix) << "\n";
}

}  // namespace

std::string emit_structure(const KnowledgeStructure& s) {
  std::ostringstream os;
  const auto& ground = s.ground();
  std::vector<std::size_t> order(ground.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return natural_less(ground[a], ground[b]); });

  write_states(os, s, "", "");
  os << "completed: " << (s.completed() ? "yes" : "no") << "\n";
  for (auto q : order) {
    std::vector<std::string> family;
    for (const auto& k : states_containing(s, q)) family.push_back(format_state(k, ground, ""));
    os << "K_" << ground[q] << " = {" << join(family, ", ") << "}\n";
  }
  const BoolMatrix rel = surmise_from_structure(s);
  os << "surmise:\n";
  for (auto p : order)
    for (auto q : order)
      if (p != q && rel(p, q)) os << "  " << ground[p] << " -> " << ground[q] << "\n";

  const auto part = equally_informative(s);
  os << "concepts:\n";
  for (const auto& c : part.blocks) {
    std::vector<std::string> names;
    for (auto m : c.members) names.push_back(ground[m]);
    os << "  " << ground[c.representative] << "* = {" << join(names, ", ") << "}\n";
  }
  os << "discriminative: " << (part.blocks.size() == ground.size() ? "yes" : "no") << "\n";
  os << "reduction:\n";
  write_states(os, discriminative_reduction(s), "  ", "*");
  return os.str();
}

}  // namespace surmise
