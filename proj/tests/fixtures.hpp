#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "surmise/core.hpp"
#include "surmise/kst.hpp"

namespace fixtures {

// The 12-model, 10-target experiment table ("judgments of models").
inline const std::vector<std::string> kTable4Targets = {"t0", "t1", "t2", "t3", "t4",
                                                        "t5", "t6", "t7", "t8", "t9"};
inline const std::vector<std::string> kTable4Models = {"M1", "M2", "M3", "M4",  "M5",  "M6",
                                                       "M7", "M8", "M9", "M10", "M11", "M12"};
inline const std::vector<std::vector<int>> kTable4Bits = {
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},  // M1
    {1, 1, 0, 0, 1, 0, 0, 0, 0, 0},  // M2
    {1, 1, 1, 0, 1, 0, 1, 0, 0, 0},  // M3
    {1, 1, 1, 0, 1, 1, 1, 0, 0, 0},  // M4
    {1, 1, 1, 0, 1, 1, 1, 0, 0, 1},  // M5
    {1, 1, 1, 1, 1, 1, 1, 0, 0, 1},  // M6
    {1, 1, 0, 0, 0, 1, 1, 0, 0, 0},  // M7
    {1, 1, 1, 0, 0, 1, 1, 0, 0, 0},  // M8
    {1, 1, 1, 1, 0, 1, 1, 0, 0, 0},  // M9
    {1, 1, 1, 1, 1, 1, 1, 0, 0, 0},  // M10
    {1, 1, 1, 1, 0, 1, 1, 0, 1, 0},  // M11
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 0},  // M12
};

inline surmise::JudgmentTable table4() {
  return surmise::build_table(kTable4Targets, kTable4Models, kTable4Bits);
}

// Covering pairs of the support-containment order on the reference table, {t0, t1}
// collapsed into t1. Frozen from the brute-force oracle in oracles.hpp.
inline const std::vector<std::pair<std::string, std::string>> kTable4Hasse = {
    {"t1", "t4"}, {"t1", "t6"}, {"t2", "t3"}, {"t2", "t9"}, {"t3", "t8"}, {"t4", "t7"},
    {"t4", "t9"}, {"t5", "t3"}, {"t5", "t9"}, {"t6", "t2"}, {"t6", "t5"}, {"t8", "t7"},
};

inline const std::vector<std::vector<std::string>> kTable4Layers = {
    {"t1"}, {"t4", "t6"}, {"t2", "t5"}, {"t3", "t9"}, {"t8"}, {"t7"},
};

// Q = {a,b,c,d,e} with 𝒦 = {∅, {b,c}, {a,b,c}, {a,b,c,d}, {a,b,c,e}, Q}.
inline surmise::KnowledgeStructure example_structure() {
  return surmise::make_structure({"a", "b", "c", "d", "e"},
                                 {{},
                                  {"b", "c"},
                                  {"a", "b", "c"},
                                  {"a", "b", "c", "d"},
                                  {"a", "b", "c", "e"},
                                  {"a", "b", "c", "d", "e"}});
}

inline std::string data_path(const std::string& name) {
  return std::string(SURMISE_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fixtures
