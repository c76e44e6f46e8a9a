#pragma once

#include <optional>

#include "toughlab/graph.hpp"
#include "toughlab/spectra.hpp"
#include "toughlab/toughness.hpp"

namespace toughlab {

// Eigenvalue lower bounds on the toughness of a connected d-regular graph.
// Each throws NonpositiveLambda for lambda <= 0 and InvalidParams for d < 1.

/// (1/3) (d^2 / (d lambda + lambda^2) - 1)
double alon_bound(int d, double lambda);
/// d / lambda - 2
double brouwer_bound(int d, double lambda);
/// d / lambda - sqrt(2)
double gu_bound(int d, double lambda);
/// d / lambda - 1
double theorem_bound(int d, double lambda);

struct BoundReport {
  int d = 0;
  double lambda = 0.0;
  double alon = 0.0;
  double brouwer = 0.0;
  double gu = 0.0;
  double theorem = 0.0;
  /// Empty when the toughness is undefined (complete graphs).
  std::optional<ToughnessResult> toughness;
  /// exact_t - theorem
  std::optional<double> slack;
  /// d / lambda - exact_t; informational only.
  std::optional<double> tight_gap;
  /// exact_t < theorem - kLambdaEpsilon
  bool violation = false;
};

/// Throws Disconnected, NotRegular, TooFewVertices, or the toughness
/// search errors.
BoundReport verify_theorem(const Graph& g, const ToughnessOptions& opts = {});
BoundReport verify_theorem(const Graph& g, const SpectralProfile& profile, const ToughnessOptions& opts = {});

/// d / lambda - t(G). Throws ToughnessUndefined for complete graphs.
double tightness_gap(const Graph& g, const ToughnessOptions& opts = {});

}  // namespace toughlab
