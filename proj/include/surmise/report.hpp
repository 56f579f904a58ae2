#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surmise/core.hpp"
#include "surmise/hasse.hpp"
#include "surmise/kst.hpp"
#include "surmise/order.hpp"

namespace surmise {

struct ClassEntry {
  std::string representative;
  std::vector<std::string> members;
  friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

struct NamedEdge {
  std::string lower;
  std::string upper;
  friend bool operator==(const NamedEdge&, const NamedEdge&) = default;
};

struct CountsEntry {
  std::string p;
  std::string q;
  PairCounts counts;
  friend bool operator==(const CountsEntry&, const CountsEntry&) = default;
};

/// Everything one analysis run produces, in emission order. All name lists
/// are in natural order; relation and hasse are sorted by (lower, upper).
struct AnalysisReport {
  std::vector<std::string> targets;
  Flexibility flexibility;
  std::vector<ClassEntry> classes;
  std::vector<NamedEdge> relation;  // irreflexive part of Ord
  std::vector<NamedEdge> hasse;
  std::vector<std::vector<std::string>> layers;
  std::optional<std::vector<CountsEntry>> counts;  // ordered pairs of distinct representatives
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct Analysis {
  OrderMatrix order;
  HasseDiagram diagram;
  AnalysisReport report;
};

/// Table -> classes -> Ord -> Hasse diagram -> report.
Analysis analyze(const JudgmentTable& table, Flexibility alpha, bool with_counts = false,
                 unsigned threads = 1);

enum class ReportFormat { Json, Text };

std::string emit_report(const AnalysisReport& report, ReportFormat format);

/// Graphviz text, prerequisites at the bottom (rankdir=BT).
std::string emit_dot(const HasseDiagram& diagram);

/// {"nodes": [{name, members, layer}], "edges": [[lower, upper], ...]}
std::string emit_hasse_json(const HasseDiagram& diagram);

/// Human-readable dump of a structure: states, 𝒦_q per target, surmise
/// pairs, concepts and the discriminative reduction.
std::string emit_structure(const KnowledgeStructure& structure);

}  // namespace surmise
