#pragma once

#include <cstdint>
#include <optional>

#include "toughlab/graph.hpp"
#include "toughlab/spectra.hpp"

namespace toughlab {

/// One evaluation of the expander mixing inequality
///   |e(A, B) - d|A||B|/n| <= lambda sqrt(|A||B|(1 - |A|/n)(1 - |B|/n)),
/// or of its single-set form |e(A) - d|A|^2/2n| <= (lambda/2)|A|(1 - |A|/n)
/// when produced by check_single.
struct MixingCheck {
  VertexSet a;
  VertexSet b;
  long e_ab = 0;
  double expected = 0.0;
  double bound = 0.0;
  /// bound - |e_ab - expected|; the inequality holds iff slack >= 0.
  double slack = 0.0;
};

/// Caches n, d and lambda for repeated checks on one connected regular graph.
class MixingVerifier {
 public:
  /// Throws NotRegular or Disconnected.
  explicit MixingVerifier(const Graph& g);
  MixingVerifier(const Graph& g, const SpectralProfile& profile);

  int degree() const { return d_; }
  double lambda() const { return lambda_; }

  MixingCheck check(VertexSet a, VertexSet b) const;
  MixingCheck check_single(VertexSet a) const;

  /// Minimum-slack check over all 2^n x 2^n pairs; first minimizer in
  /// (A, B) bitmask order. Throws TooLarge for n > max_n.
  MixingCheck exhaustive(int max_n = 10) const;

  /// Minimum-slack check over `samples` pairs whose members include each
  /// vertex independently with probability 1/2 (mt19937_64 seeded by `seed`).
  MixingCheck sampled(std::uint64_t samples, std::uint64_t seed) const;

  /// lambda n / (d + lambda), the most components any G - S can have.
  double component_bound() const;

 private:
  Graph g_;
  int n_;
  int d_;
  double lambda_;
};

MixingCheck mixing_check(const Graph& g, VertexSet a, VertexSet b);
MixingCheck mixing_check_single(const Graph& g, VertexSet a);
MixingCheck exhaustive_mixing_verify(const Graph& g, int max_n = 10);
MixingCheck sampled_mixing_verify(const Graph& g, std::uint64_t samples, std::uint64_t seed);

double component_count_bound(const Graph& g);

struct ComponentBoundCheck {
  double bound = 0.0;
  /// Largest c(G - S) over proper S with c(G - S) >= 2; zero if none exist.
  int max_components = 0;
  /// First cut in bitmask order attaining max_components.
  VertexSet argmax;
  /// Smallest single-set mixing slack over the sets U made of one vertex
  /// (the smallest) per component of G - S.
  std::optional<double> min_replay_slack;
  /// Every enumerated U was independent.
  bool replay_independent = true;
  bool holds = true;

  explicit operator bool() const { return holds; }
};

/// Enumerates every proper S with c(G - S) >= 2. Throws TooLarge for n > max_n.
ComponentBoundCheck verify_component_bound(const Graph& g, int max_n = 12);
ComponentBoundCheck verify_component_bound(const Graph& g, const MixingVerifier& verifier, int max_n = 12);

}  // namespace toughlab
