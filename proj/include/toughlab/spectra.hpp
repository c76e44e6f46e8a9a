#pragma once

#include <vector>

#include "toughlab/graph.hpp"

namespace toughlab {

inline constexpr double kDefaultSpectrumTolerance = 1e-12;
inline constexpr int kDefaultMaxSweeps = 100;
/// Slack applied to every comparison that involves a computed eigenvalue.
inline constexpr double kLambdaEpsilon = 1e-9;

struct SpectralProfile {
  /// Adjacency eigenvalues, descending.
  std::vector<double> eigenvalues;
  double lambda1 = 0.0;
  /// max(|lambda_2|, |lambda_n|); zero when n < 2.
  double lambda = 0.0;
  /// Max over eigenpairs of the max-norm of A v - lambda v.
  double residual = 0.0;
  int sweeps = 0;
};

SpectralProfile spectrum(const Graph& g, double tol = kDefaultSpectrumTolerance,
                         int max_sweeps = kDefaultMaxSweeps);

/// Throws TooFewVertices for n < 2.
double second_largest_abs(const Graph& g);

/// True iff lambda1 matches the degree within kLambdaEpsilon. Throws
/// NotRegular when g is not regular.
bool check_regular_spectrum(const Graph& g, const SpectralProfile& profile);

}  // namespace toughlab
