#include "toughlab/bounds.hpp"

#include <cmath>
#include <string>

#include "toughlab/error.hpp"

namespace toughlab {

namespace {

void check_args(int d, double lambda) {
  if (d < 1) throw Error(ErrorCode::InvalidParams, "degree must be >= 1, got " + std::to_string(d));
  if (!(lambda > 0.0)) throw Error(ErrorCode::NonpositiveLambda, "lambda must be positive");
}

int require_connected_regular(const Graph& g) {
  if (g.num_vertices() < 2) throw Error(ErrorCode::TooFewVertices, "bounds need n >= 2");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "the bound applies to connected graphs");
  const Regularity reg = regularity(g);
  if (!reg.regular())
    throw Error(ErrorCode::NotRegular, "vertex " + std::to_string(reg.violating_vertex) + " breaks regularity");
  return *reg.degree;
}

}  // namespace

double alon_bound(int d, double lambda) {
  check_args(d, lambda);
  const double dd = d;
  return (dd * dd / (dd * lambda + lambda * lambda) - 1.0) / 3.0;
}

double brouwer_bound(int d, double lambda) {
  check_args(d, lambda);
  return d / lambda - 2.0;
}

double gu_bound(int d, double lambda) {
  check_args(d, lambda);
  return d / lambda - std::sqrt(2.0);
}

double theorem_bound(int d, double lambda) {
  check_args(d, lambda);
  return d / lambda - 1.0;
}

BoundReport verify_theorem(const Graph& g, const ToughnessOptions& opts) {
  require_connected_regular(g);
  return verify_theorem(g, spectrum(g), opts);
}

BoundReport verify_theorem(const Graph& g, const SpectralProfile& profile, const ToughnessOptions& opts) {
  BoundReport r;
  r.d = require_connected_regular(g);
  r.lambda = profile.lambda;
  r.alon = alon_bound(r.d, r.lambda);
  r.brouwer = brouwer_bound(r.d, r.lambda);
  r.gu = gu_bound(r.d, r.lambda);
  r.theorem = theorem_bound(r.d, r.lambda);
  r.toughness = exact_toughness(g, opts);
  if (r.toughness) {
    const double t = r.toughness->t.to_double();
    r.slack = t - r.theorem;
    r.tight_gap = r.d / r.lambda - t;
    r.violation = t < r.theorem - kLambdaEpsilon;
  }
  return r;
}

double tightness_gap(const Graph& g, const ToughnessOptions& opts) {
  const BoundReport r = verify_theorem(g, opts);
  if (!r.tight_gap) throw Error(ErrorCode::ToughnessUndefined, "no disconnecting set exists");
  return *r.tight_gap;
}

}  // namespace toughlab
