#include "toughlab/report.hpp"

#include "toughlab/error.hpp"

namespace toughlab {

using nlohmann::json;

json to_json(VertexSet s) { return s.to_vector(); }

json to_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

json to_json(const SpectralProfile& p) {
  return {{"eigenvalues", p.eigenvalues}, {"lambda1", p.lambda1}, {"lambda", p.lambda}, {"residual", p.residual}};
}

json to_json(const std::optional<ToughnessResult>& t) {
  if (!t) return {{"defined", false}};
  return {{"defined", true}, {"t", to_json(t->t)}, {"witness", to_json(t->witness)}, {"components", t->components}};
}

json to_json(const BoundReport& r) {
  json out = {{"d", r.d},           {"lambda", r.lambda}, {"alon", r.alon},
              {"brouwer", r.brouwer}, {"gu", r.gu},         {"theorem", r.theorem}};
  out["exact_t"] = r.toughness ? to_json(r.toughness->t) : json(nullptr);
  out["slack"] = r.slack ? json(*r.slack) : json(nullptr);
  out["tight_gap"] = r.tight_gap ? json(*r.tight_gap) : json(nullptr);
  out["violation"] = r.violation;
  return out;
}

json to_json(const MixingCheck& c) {
  return {{"A", to_json(c.a)},           {"B", to_json(c.b)},   {"eAB", c.e_ab},
          {"expected", c.expected}, {"bound", c.bound}, {"slack", c.slack}};
}

json to_json(const ComponentBoundCheck& c) {
  return {{"value", c.bound},
          {"verified", c.holds},
          {"max_components", c.max_components},
          {"argmax", to_json(c.argmax)},
          {"min_replay_slack", c.min_replay_slack ? json(*c.min_replay_slack) : json(nullptr)}};
}

json to_json(const PartitionWitness& w) {
  const char* kind = w.kind == PartitionCase::LargestAlone ? "largest_alone"
                     : w.kind == PartitionCase::Direct     ? "direct"
                                                           : "trimmed";
  return {{"ok", true},         {"case", kind},           {"X", to_json(w.x)},
          {"Y", to_json(w.y)},  {"sizeX", w.size_x},      {"sizeY", w.size_y},
          {"crossEdges", w.cross_edges}};
}

Analysis analyze(const Graph& g, const AnalyzeOptions& opts) {
  if (opts.partition && !opts.toughness)
    throw Error(ErrorCode::InvalidParams, "--partition requires --toughness");

  Analysis out;
  json& r = out.report;
  const Regularity reg = regularity(g);
  const bool connected = is_connected(g);
  r["schema"] = kReportSchema;
  r["graph_meta"] = {{"n", g.num_vertices()},
                     {"m", g.num_edges()},
                     {"d", reg.regular() ? json(*reg.degree) : json(nullptr)},
                     {"connected", connected}};
  for (const char* key : {"spectral", "bounds", "toughness", "mixing", "component_bound", "partition"})
    r[key] = nullptr;

  const bool wants_spectrum = opts.bounds || opts.mixing || opts.component_bound;
  std::optional<SpectralProfile> profile;
  if (wants_spectrum) {
    if (!connected) throw Error(ErrorCode::Disconnected, "spectral checks need a connected graph");
    if (!reg.regular())
      throw Error(ErrorCode::NotRegular, "vertex " + std::to_string(reg.violating_vertex) + " breaks regularity");
    profile = spectrum(g);
    r["spectral"] = to_json(*profile);
  }

  std::optional<ToughnessResult> tough;
  if (opts.bounds) {
    const BoundReport b = verify_theorem(g, *profile, opts.search);
    tough = b.toughness;
    r["bounds"] = to_json(b);
    out.violation |= b.violation;
  } else if (opts.toughness) {
    tough = exact_toughness(g, opts.search);
  }
  if (opts.toughness) r["toughness"] = to_json(tough);

  if (opts.mixing) {
    const MixingVerifier verifier(g, *profile);
    const bool exhaustive = *opts.mixing == MixingMode::Exhaustive;
    const MixingCheck worst =
        exhaustive ? verifier.exhaustive(opts.exhaustive_mixing_max_n) : verifier.sampled(opts.samples, opts.seed);
    r["mixing"] = {{"mode", exhaustive ? "exhaustive" : "sampled"},
                   {"samples", exhaustive ? json(nullptr) : json(opts.samples)},
                   {"seed", exhaustive ? json(nullptr) : json(opts.seed)},
                   {"worst", to_json(worst)}};
    out.violation |= worst.slack < -kLambdaEpsilon;
  }

  if (opts.component_bound) {
    const MixingVerifier verifier(g, *profile);
    const ComponentBoundCheck check = verify_component_bound(g, verifier, opts.component_bound_max_n);
    r["component_bound"] = to_json(check);
    out.violation |= !check.holds;
  }

  if (opts.partition) {
    if (!tough) {
      r["partition"] = {{"ok", false}, {"reason", "toughness undefined"}};
    } else {
      const std::vector<VertexSet> comps = components(g, tough->witness);
      try {
        r["partition"] = to_json(claim2_partition(g, comps));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PreconditionViolated) throw;
        r["partition"] = {{"ok", false}, {"reason", e.what()}};
      }
      std::vector<int> sizes;
      for (VertexSet c : comps) sizes.push_back(c.size());
      r["partition"]["component_sizes"] = sizes;
      r["partition"]["claim1_hypothesis"] = check_claim1_hypothesis(std::span<const VertexSet>(comps));
    }
  }
  return out;
}

}  // namespace toughlab
