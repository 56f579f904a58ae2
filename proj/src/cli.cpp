#include "surmise/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "surmise/csv.hpp"
#include "surmise/error.hpp"
#include "surmise/kst.hpp"
#include "surmise/report.hpp"
#include "surmise/synth.hpp"

namespace surmise {

namespace {

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

JudgmentTable load_table(const std::string& path) { return parse_csv(read_input(path)); }

struct Options {
  std::string csv;
  std::string flexibility = "0";
  bool json = false;
  bool text = false;
  bool dot = false;
  bool counts = false;
  bool no_complete = false;
  std::string p;
  std::string q;
  std::size_t targets = 0;
  std::size_t models = 0;
  std::uint64_t seed = 0;
  double noise = 0.0;
  double density = 0.5;
  unsigned threads = 1;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extract the prerequisite hierarchy among targets from 0/1 judgment tables"};
  app.name("surmise");
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads for pairwise counting")
      ->check(CLI::Range(1U, 1024U));

  auto* analyze_cmd = app.add_subcommand("analyze", "Equivalence classes, order, Hasse edges, layers");
  analyze_cmd->add_option("csv", o.csv, "Judgment table (CSV, '-' for stdin)")->required();
  analyze_cmd->add_option("--flexibility", o.flexibility, "Tolerated percentage m, 0 <= m < 50");
  auto* aj = analyze_cmd->add_flag("--json", o.json, "JSON report");
  auto* at = analyze_cmd->add_flag("--text", o.text, "Text report (default)");
  aj->excludes(at);
  analyze_cmd->add_flag("--counts", o.counts, "Include pairwise counts for representatives");

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram as DOT or JSON");
  hasse_cmd->add_option("csv", o.csv, "Judgment table (CSV, '-' for stdin)")->required();
  hasse_cmd->add_option("--flexibility", o.flexibility, "Tolerated percentage m, 0 <= m < 50");
  auto* hd = hasse_cmd->add_flag("--dot", o.dot, "Graphviz DOT (default)");
  auto* hj = hasse_cmd->add_flag("--json", o.json, "JSON nodes and edges");
  hd->excludes(hj);

  auto* counts_cmd = app.add_subcommand("counts", "Pattern counts n1..n4 for an ordered pair");
  counts_cmd->add_option("csv", o.csv, "Judgment table (CSV, '-' for stdin)")->required();
  counts_cmd->add_option("--p", o.p, "First target name")->required();
  counts_cmd->add_option("--q", o.q, "Second target name")->required();

  auto* structure_cmd = app.add_subcommand("structure", "Knowledge structure view of the table rows");
  structure_cmd->add_option("csv", o.csv, "Judgment table (CSV, '-' for stdin)")->required();
  structure_cmd->add_flag("--no-complete", o.no_complete, "Do not add the empty and full states");

  auto* synth_cmd = app.add_subcommand("synth", "Sample a table from a random planted order");
  synth_cmd->add_option("--targets", o.targets, "Number of targets")->required();
  synth_cmd->add_option("--models", o.models, "Number of models")->required();
  synth_cmd->add_option("--seed", o.seed, "Random seed")->required();
  synth_cmd->add_option("--noise", o.noise, "Per-cell flip probability");
  synth_cmd->add_option("--density", o.density, "Edge probability of the planted order");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed() || hasse_cmd->parsed()) {
      Flexibility alpha;
      try {
        alpha = Flexibility::parse(o.flexibility);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      const auto table = load_table(o.csv);
      const Analysis a = analyze(table, alpha, o.counts, o.threads);
      if (analyze_cmd->parsed()) {
        out << emit_report(a.report, o.json ? ReportFormat::Json : ReportFormat::Text);
      } else {
        out << (o.json ? emit_hasse_json(a.diagram) : emit_dot(a.diagram));
      }
    } else if (counts_cmd->parsed()) {
      const auto table = load_table(o.csv);
      std::size_t p = 0, q = 0;
      try {
        p = table.target_index(o.p);
        q = table.target_index(o.q);
      } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      const PairCounts c = pair_counts(table, p, q);
      out << "n1=" << c.n1 << " n2=" << c.n2 << " n3=" << c.n3 << " n4=" << c.n4 << "\n";
    } else if (structure_cmd->parsed()) {
      const auto table = load_table(o.csv);
      out << emit_structure(structure_from_table(table, !o.no_complete));
    } else if (synth_cmd->parsed()) {
      SynthSpec spec{random_poset(o.targets, o.density, o.seed), o.models, o.noise, o.seed};
      out << write_csv(sample_models(spec));
    }
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const InputError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConstraint;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitConstraint;
  }
  return kExitOk;
}

}  // namespace surmise
