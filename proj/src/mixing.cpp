#include "toughlab/mixing.hpp"

#include <cmath>
#include <random>
#include <string>

#include "toughlab/error.hpp"

namespace toughlab {

namespace {

int require_connected_regular(const Graph& g) {
  if (g.num_vertices() < 2) throw Error(ErrorCode::TooFewVertices, "mixing checks need n >= 2");
  const Regularity reg = regularity(g);
  if (!reg.regular())
    throw Error(ErrorCode::NotRegular, "vertex " + std::to_string(reg.violating_vertex) + " breaks regularity");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "mixing checks need a connected graph");
  return *reg.degree;
}

bool better(const MixingCheck& candidate, const MixingCheck& incumbent) { return candidate.slack < incumbent.slack; }

}  // namespace

MixingVerifier::MixingVerifier(const Graph& g) : MixingVerifier(g, (require_connected_regular(g), spectrum(g))) {}

MixingVerifier::MixingVerifier(const Graph& g, const SpectralProfile& profile)
    : g_(g), n_(g.num_vertices()), d_(require_connected_regular(g)), lambda_(profile.lambda) {}

MixingCheck MixingVerifier::check(VertexSet a, VertexSet b) const {
  MixingCheck out{a, b, e_between(g_, a, b), 0.0, 0.0, 0.0};
  const double sa = a.size();
  const double sb = b.size();
  const double n = n_;
  out.expected = d_ * sa * sb / n;
  out.bound = lambda_ * std::sqrt(sa * sb * (n - sa) * (n - sb)) / n;
  out.slack = out.bound - std::abs(static_cast<double>(out.e_ab) - out.expected);
  return out;
}

MixingCheck MixingVerifier::check_single(VertexSet a) const {
  MixingCheck out{a, a, e_within(g_, a), 0.0, 0.0, 0.0};
  const double sa = a.size();
  const double n = n_;
  out.expected = d_ * sa * sa / (2.0 * n);
  out.bound = lambda_ * sa * (n - sa) / (2.0 * n);
  out.slack = out.bound - std::abs(static_cast<double>(out.e_ab) - out.expected);
  return out;
}

MixingCheck MixingVerifier::exhaustive(int max_n) const {
  if (n_ > max_n)
    throw Error(ErrorCode::TooLarge, "exhaustive mixing capped at n = " + std::to_string(max_n) + ", got " +
                                         std::to_string(n_));
  const VertexSet::word_type limit = VertexSet::word_type{1} << n_;
  MixingCheck worst = check(VertexSet{}, VertexSet{});
  for (VertexSet::word_type a = 0; a < limit; ++a) {
    for (VertexSet::word_type b = 0; b < limit; ++b) {
      const MixingCheck c = check(VertexSet(a), VertexSet(b));
      if (better(c, worst)) worst = c;
    }
  }
  return worst;
}

MixingCheck MixingVerifier::sampled(std::uint64_t samples, std::uint64_t seed) const {
  if (samples < 1) throw Error(ErrorCode::InvalidParams, "need at least one sample");
  std::mt19937_64 rng(seed);
  const VertexSet::word_type mask = VertexSet::prefix(n_).bits();
  MixingCheck worst;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const VertexSet a(rng() & mask);
    const VertexSet b(rng() & mask);
    const MixingCheck c = check(a, b);
    if (i == 0 || better(c, worst)) worst = c;
  }
  return worst;
}

double MixingVerifier::component_bound() const { return lambda_ * n_ / (d_ + lambda_); }

MixingCheck mixing_check(const Graph& g, VertexSet a, VertexSet b) { return MixingVerifier(g).check(a, b); }

MixingCheck mixing_check_single(const Graph& g, VertexSet a) { return MixingVerifier(g).check_single(a); }

MixingCheck exhaustive_mixing_verify(const Graph& g, int max_n) {
  if (g.num_vertices() > max_n)
    throw Error(ErrorCode::TooLarge, "exhaustive mixing capped at n = " + std::to_string(max_n));
  return MixingVerifier(g).exhaustive(max_n);
}

MixingCheck sampled_mixing_verify(const Graph& g, std::uint64_t samples, std::uint64_t seed) {
  return MixingVerifier(g).sampled(samples, seed);
}

double component_count_bound(const Graph& g) { return MixingVerifier(g).component_bound(); }

ComponentBoundCheck verify_component_bound(const Graph& g, int max_n) {
  if (g.num_vertices() > max_n)
    throw Error(ErrorCode::TooLarge, "component bound enumeration capped at n = " + std::to_string(max_n));
  return verify_component_bound(g, MixingVerifier(g), max_n);
}

ComponentBoundCheck verify_component_bound(const Graph& g, const MixingVerifier& verifier, int max_n) {
  const int n = g.num_vertices();
  if (n > max_n)
    throw Error(ErrorCode::TooLarge, "component bound enumeration capped at n = " + std::to_string(max_n) + ", got " +
                                         std::to_string(n));
  ComponentBoundCheck out;
  out.bound = verifier.component_bound();
  const VertexSet::word_type full = g.vertices().bits();
  for (VertexSet::word_type bits = 0; bits < full; ++bits) {
    const VertexSet cut(bits);
    const std::vector<VertexSet> comps = components(g, cut);
    const int c = static_cast<int>(comps.size());
    if (c < 2) continue;

    if (c > out.max_components) {
      out.max_components = c;
      out.argmax = cut;
    }
    if (c > out.bound + kLambdaEpsilon) out.holds = false;

    VertexSet reps;
    for (VertexSet comp : comps) reps.insert(comp.lowest());
    const MixingCheck replay = verifier.check_single(reps);
    if (replay.e_ab != 0) out.replay_independent = false;
    if (!out.min_replay_slack || replay.slack < *out.min_replay_slack) out.min_replay_slack = replay.slack;
    if (replay.slack < -kLambdaEpsilon) out.holds = false;
  }
  if (!out.replay_independent) out.holds = false;
  return out;
}

}  // namespace toughlab
