#include "toughlab/spectra.hpp"

#include <cmath>
#include <string>

#include "toughlab/error.hpp"
#include "toughlab/jacobi.hpp"

namespace toughlab {

SpectralProfile spectrum(const Graph& g, double tol, int max_sweeps) {
  const int n = g.num_vertices();
  if (n < 1) throw Error(ErrorCode::TooFewVertices, "spectrum of the empty graph");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidParams, "tolerance must be positive");

  const Eigen::MatrixXd a = adjacency_matrix<double>(g);
  const auto eig = jacobi_eigen(a, tol, max_sweeps);
  if (!eig.converged)
    throw Error(ErrorCode::NoConvergence, "off-diagonal norm " + std::to_string(eig.off_norm) + " after " +
                                              std::to_string(eig.sweeps) + " sweeps");

  SpectralProfile profile;
  profile.eigenvalues.assign(eig.eigenvalues.data(), eig.eigenvalues.data() + n);
  profile.lambda1 = profile.eigenvalues.front();
  if (n >= 2)
    profile.lambda = std::max(std::abs(profile.eigenvalues[1]), std::abs(profile.eigenvalues.back()));
  profile.residual = eigen_residual(a, eig);
  profile.sweeps = eig.sweeps;
  return profile;
}

double second_largest_abs(const Graph& g) {
  if (g.num_vertices() < 2)
    throw Error(ErrorCode::TooFewVertices, "second eigenvalue needs n >= 2, got " + std::to_string(g.num_vertices()));
  return spectrum(g).lambda;
}

bool check_regular_spectrum(const Graph& g, const SpectralProfile& profile) {
  const Regularity reg = regularity(g);
  if (!reg.regular())
    throw Error(ErrorCode::NotRegular, "vertex " + std::to_string(reg.violating_vertex) + " breaks regularity");
  return std::abs(profile.lambda1 - *reg.degree) <= kLambdaEpsilon;
}

}  // namespace toughlab
