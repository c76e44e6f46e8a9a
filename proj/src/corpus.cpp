#include "toughlab/corpus.hpp"

#include <fmt/format.h>

#include <sstream>

#include "toughlab/bounds.hpp"
#include "toughlab/error.hpp"
#include "toughlab/mixing.hpp"

namespace toughlab {

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back({parse_family_spec(line), number});
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "manifest line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::string default_corpus_manifest() {
  std::string out = "# Reference corpus: connected regular graphs checked by verify-corpus.\n";
  for (int n = 3; n <= 12; ++n) out += fmt::format("cycle {}\n", n);
  for (int n = 2; n <= 8; ++n) out += fmt::format("complete {}\n", n);
  for (int a = 1; a <= 5; ++a) out += fmt::format("complete_bipartite {} {}\n", a, a);
  for (int k = 1; k <= 4; ++k) out += fmt::format("hypercube {}\n", k);
  out += "petersen\n";
  out += "kneser 7 3\n";
  out += "circulant 8 1 2\n";
  out += "circulant 10 1 3\n";
  out += "circulant 12 1 5\n";
  constexpr int kOrders[] = {8, 10, 12, 14};
  constexpr int kDegrees[] = {3, 4, 5};
  for (int seed = 1; seed <= 50; ++seed)
    out += fmt::format("random_regular {} {} seed={}\n", kOrders[(seed - 1) % 4], kDegrees[((seed - 1) / 4) % 3], seed);
  return out;
}

std::vector<CorpusRow> verify_corpus(const std::vector<ManifestEntry>& entries, const CorpusOptions& opts) {
  std::vector<CorpusRow> rows;
  rows.reserve(entries.size());
  for (const ManifestEntry& entry : entries) {
    CorpusRow row;
    row.name = entry.spec.to_string();

    Graph g;
    try {
      g = make_graph(entry.spec);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RetriesExhausted) throw;
      row.status = RowStatus::Skipped;
      row.note = "generator retries exhausted";
      rows.push_back(row);
      continue;
    }
    row.n = g.num_vertices();
    row.m = g.num_edges();
    const Regularity reg = regularity(g);
    if (!reg.regular() || !is_connected(g) || row.n < 2)
      throw Error(ErrorCode::InvalidParams, "manifest line " + std::to_string(entry.line) + ": " + row.name +
                                                " is not a connected regular graph on >= 2 vertices");
    row.d = *reg.degree;

    const SpectralProfile profile = spectrum(g);
    row.lambda = profile.lambda;
    row.theorem = theorem_bound(row.d, row.lambda);

    bool violated = false;
    if (row.n <= opts.search.max_n) {
      const BoundReport b = verify_theorem(g, profile, opts.search);
      row.toughness_checked = true;
      if (b.toughness) row.exact_t = b.toughness->t;
      row.slack = b.slack;
      violated |= b.violation;
    } else {
      row.note = fmt::format("toughness skipped (n > {})", opts.search.max_n);
    }

    const MixingVerifier verifier(g, profile);
    row.mixing_exhaustive = row.n <= opts.exhaustive_mixing_max_n;
    const MixingCheck worst = row.mixing_exhaustive ? verifier.exhaustive(opts.exhaustive_mixing_max_n)
                                                    : verifier.sampled(opts.samples, opts.seed);
    row.mixing_slack = worst.slack;
    violated |= worst.slack < -kLambdaEpsilon;

    if (row.n <= opts.component_bound_max_n) {
      const ComponentBoundCheck cb = verify_component_bound(g, verifier, opts.component_bound_max_n);
      row.component_bound = cb.bound;
      row.max_components = cb.max_components;
      violated |= !cb.holds;
    }

    if (violated) row.status = RowStatus::Violation;
    else if (!row.toughness_checked) row.status = RowStatus::Skipped;
    rows.push_back(row);
  }
  return rows;
}

std::string format_corpus_table(const std::vector<CorpusRow>& rows) {
  std::string out = fmt::format("{:<32} {:>3} {:>3} {:>10} {:>10} {:>7} {:>10} {:>4} {:>11} {:>9}  {}\n", "graph", "n",
                                "d", "lambda", "d/l-1", "t", "slack", "mix", "mix_slack", "c_max/hb", "status");
  int violations = 0;
  int skipped = 0;
  for (const CorpusRow& r : rows) {
    const char* status = r.status == RowStatus::Ok ? "ok" : r.status == RowStatus::Violation ? "VIOLATION" : "skipped";
    violations += r.status == RowStatus::Violation;
    skipped += r.status == RowStatus::Skipped;
    if (r.n == 0) {
      out += fmt::format("{:<32} {:>3} {:>3} {:>10} {:>10} {:>7} {:>10} {:>4} {:>11} {:>9}  {} ({})\n", r.name, "-", "-",
                         "-", "-", "-", "-", "-", "-", "-", status, r.note);
      continue;
    }
    const std::string t = !r.toughness_checked ? "-" : r.exact_t ? r.exact_t->to_string() : "undef";
    const std::string slack = r.slack ? fmt::format("{:.6f}", *r.slack) : "-";
    const std::string cb =
        r.component_bound ? fmt::format("{}/{:.3f}", *r.max_components, *r.component_bound) : std::string("-");
    out += fmt::format("{:<32} {:>3} {:>3} {:>10.6f} {:>10.6f} {:>7} {:>10} {:>4} {:>11.3e} {:>9}  {}{}\n", r.name, r.n,
                       r.d, r.lambda, r.theorem, t, slack, r.mixing_exhaustive ? "exh" : "smp", r.mixing_slack, cb,
                       status, r.note.empty() ? "" : " (" + r.note + ")");
  }
  out += fmt::format("{} graphs, {} violations, {} skipped\n", rows.size(), violations, skipped);
  return out;
}

}  // namespace toughlab
