#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "surmise/cli.hpp"
#include "surmise/csv.hpp"

using namespace surmise;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTable4 = fixtures::data_path("table4.csv");

}  // namespace

TEST_CASE("hasse emits DOT") {
  const auto r = run({"hasse", kTable4, "--dot"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == fixtures::read_file(fixtures::data_path("table4_hasse.dot")));
  CHECK(run({"hasse", kTable4}).out == r.out);
  const auto j = run({"hasse", kTable4, "--json"});
  CHECK(j.code == kExitOk);
  CHECK(j.out.find("\"edges\"") != std::string::npos);
}

TEST_CASE("counts prints the four pattern counts") {
  const auto r = run({"counts", kTable4, "--p", "t5", "--q", "t6"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n1=9 n2=0 n3=1 n4=2\n");
  CHECK(run({"counts", kTable4, "--p", "t6", "--q", "t4"}).out == "n1=6 n2=4 n3=1 n4=1\n");
  CHECK(run({"counts", kTable4, "--p", "nope", "--q", "t4"}).code == kExitUsage);
}

TEST_CASE("analyze formats and flexibility handling") {
  const auto text = run({"analyze", kTable4});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("  t1 = {t0, t1}\n") != std::string::npos);
  const auto json = run({"analyze", kTable4, "--json", "--flexibility", "20"});
  CHECK(json.code == kExitOk);
  CHECK(json.out.find("\"basis_points\": 2000") != std::string::npos);
  CHECK(run({"analyze", kTable4, "--counts", "--json"}).out.find("\"counts\"") != std::string::npos);

  CHECK(run({"analyze", kTable4, "--flexibility", "50"}).code == kExitConstraint);
  CHECK(run({"analyze", kTable4, "--flexibility", "-1"}).code == kExitConstraint);
  CHECK(run({"hasse", kTable4, "--flexibility", "75"}).code == kExitConstraint);
  CHECK(run({"analyze", kTable4, "--flexibility", "abc"}).code == kExitUsage);
  CHECK(run({"analyze", kTable4, "--flexibility", "1.234"}).code == kExitUsage);
  CHECK(run({"analyze", kTable4, "--json", "--text"}).code == kExitUsage);
}

TEST_CASE("usage and input errors map to exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"analyze"}).code == kExitUsage);
  CHECK(run({"analyze", kTable4, "--bogus"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"analyze", "/nonexistent/table.csv"}).code == kExitMalformedInput);
  const auto bad = run({"analyze", fixtures::data_path("malformed.csv")});
  CHECK(bad.code == kExitMalformedInput);
  CHECK(bad.err.find("non-binary cell") != std::string::npos);
  CHECK(bad.err.find("row 3, column 4") != std::string::npos);
}

TEST_CASE("structure reproduces the worked example") {
  const auto r = run({"structure", fixtures::data_path("kst_example.csv")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == fixtures::read_file(fixtures::data_path("kst_example_structure.txt")));

  const auto raw = run({"structure", kTable4, "--no-complete"});
  CHECK(raw.out.find("states: 12\n") != std::string::npos);
  CHECK(raw.out.find("completed: no\n") != std::string::npos);
  CHECK(run({"structure", kTable4}).out.find("states: 14\n") != std::string::npos);
}

TEST_CASE("synth emits a parseable table") {
  const auto r = run({"synth", "--targets", "6", "--models", "25", "--seed", "9"});
  CHECK(r.code == kExitOk);
  const auto t = parse_csv(r.out);
  CHECK(t.target_count() == 6);
  CHECK(t.model_count() == 25);
  CHECK(run({"synth", "--targets", "6", "--models", "25", "--seed", "9"}).out == r.out);
  CHECK(run({"synth", "--targets", "6", "--models", "25", "--seed", "9", "--noise", "0.2",
             "--density", "0.8"})
            .code == kExitOk);
  CHECK(run({"synth", "--targets", "25", "--models", "5", "--seed", "1"}).code == kExitConstraint);
  CHECK(run({"synth", "--targets", "5", "--models", "5", "--seed", "1", "--noise", "2"}).code ==
        kExitConstraint);
  CHECK(run({"synth", "--targets", "5"}).code == kExitUsage);
}

TEST_CASE("thread count does not change output") {
  for (const auto* cmd : {"analyze", "hasse"}) {
    const auto serial = run({cmd, kTable4, "--flexibility", "20"});
    const auto parallel = run({"--threads", "4", cmd, kTable4, "--flexibility", "20"});
    CHECK(serial.code == kExitOk);
    CHECK(parallel.out == serial.out);
  }
}
