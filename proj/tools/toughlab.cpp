#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toughlab/corpus.hpp"
#include "toughlab/error.hpp"
#include "toughlab/families.hpp"
#include "toughlab/graph_io.hpp"
#include "toughlab/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitViolation = 3;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw toughlab::Error(toughlab::ErrorCode::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// TOUGHLAB_MAX_N overrides the default exact-toughness cap; --force lifts it.
int toughness_cap(bool force) {
  if (force) return toughlab::kMaxVertices;
  const char* env = std::getenv("TOUGHLAB_MAX_N");
  if (env == nullptr || *env == '\0') return toughlab::kDefaultToughnessMaxN;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size() || value < 2)
    throw toughlab::Error(toughlab::ErrorCode::InvalidParams, std::string("bad TOUGHLAB_MAX_N '") + env + "'");
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toughness, adjacency spectra and eigenvalue toughness bounds for regular graphs"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a graph from a family");
  std::string family;
  std::vector<int> params;
  std::optional<std::uint64_t> gen_seed;
  std::string format = "graph6";
  std::string out_path = "-";
  gen->add_option("family", family, "cycle | complete | complete_bipartite | hypercube | kneser | petersen | "
                                    "circulant | random_regular")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", gen_seed, "Seed for random_regular");
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));
  gen->add_option("-o,--out", out_path, "Output file (- for stdout)");

  auto* analyze = app.add_subcommand("analyze", "Analyze a graph6 or edge-list file and print a JSON report");
  std::string input;
  toughlab::AnalyzeOptions aopts;
  std::string mixing_mode;
  bool force = false;
  analyze->add_option("input", input, "Graph file (- for stdin)")->required();
  analyze->add_flag("--toughness", aopts.toughness, "Exact toughness by pruned search");
  analyze->add_flag("--bounds", aopts.bounds, "Eigenvalue bounds against the exact toughness");
  analyze->add_option("--mixing", mixing_mode, "Expander mixing check")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  analyze->add_option("--samples", aopts.samples, "Sampled mixing pairs")->check(CLI::PositiveNumber);
  analyze->add_option("--seed", aopts.seed, "Sampled mixing seed");
  analyze->add_flag("--component-bound", aopts.component_bound, "Enumerate cuts against the component bound");
  analyze->add_flag("--partition", aopts.partition, "Two-block partition of the witness components");
  analyze->add_flag("--force", force, "Lift the exact-toughness size cap");

  auto* corpus = app.add_subcommand("verify-corpus", "Check every graph of a manifest");
  std::string manifest_path;
  toughlab::CorpusOptions copts;
  bool corpus_force = false;
  corpus->add_option("manifest", manifest_path, "Manifest file, one family spec per line")->required();
  corpus->add_option("--samples", copts.samples, "Sampled mixing pairs")->check(CLI::PositiveNumber);
  corpus->add_option("--seed", copts.seed, "Sampled mixing seed");
  corpus->add_flag("--force", corpus_force, "Lift the exact-toughness size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen) {
      std::string line = family;
      for (int p : params) line += " " + std::to_string(p);
      if (gen_seed) line += " seed=" + std::to_string(*gen_seed);
      const toughlab::Graph g = toughlab::make_graph(toughlab::parse_family_spec(line));
      const std::string text =
          format == "graph6" ? toughlab::emit_graph6(g) + "\n" : toughlab::emit_edge_list(g);
      if (out_path == "-") {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw toughlab::Error(toughlab::ErrorCode::InvalidParams, "cannot write '" + out_path + "'");
        out << text;
      }
      return kExitOk;
    }

    if (*analyze) {
      if (!mixing_mode.empty())
        aopts.mixing = mixing_mode == "exhaustive" ? toughlab::MixingMode::Exhaustive : toughlab::MixingMode::Sampled;
      aopts.search.max_n = toughness_cap(force);
      const toughlab::Graph g = toughlab::parse_graph_auto(read_input(input));
      const toughlab::Analysis result = toughlab::analyze(g, aopts);
      std::cout << result.report.dump(2) << "\n";
      return result.violation ? kExitViolation : kExitOk;
    }

    if (*corpus) {
      copts.search.max_n = toughness_cap(corpus_force);
      const auto entries = toughlab::parse_manifest(read_input(manifest_path));
      const auto rows = toughlab::verify_corpus(entries, copts);
      std::cout << toughlab::format_corpus_table(rows);
      for (const auto& row : rows)
        if (row.status == toughlab::RowStatus::Violation) return kExitViolation;
      return kExitOk;
    }
  } catch (const toughlab::Error& e) {
    std::cerr << "toughlab: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
