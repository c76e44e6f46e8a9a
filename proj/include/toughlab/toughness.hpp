#pragma once

#include <optional>

#include "toughlab/graph.hpp"
#include "toughlab/rational.hpp"

namespace toughlab {

inline constexpr int kDefaultToughnessMaxN = 24;

struct ToughnessOptions {
  /// Exact search refuses graphs with more vertices (TooLarge).
  int max_n = kDefaultToughnessMaxN;
};

struct ToughnessResult {
  Rational t;
  /// A minimizing cut S; the first minimizer in (|S|, bitmask) order.
  VertexSet witness;
  int components = 0;
};

/// Exact t(G) = min |S| / c(G - S) over proper S with c(G - S) > 1.
/// Returns nullopt when no such S exists (complete graphs).
///
/// Cut sizes are visited in increasing order. A size class s is skipped
/// outright once s / min(n - s, alpha(G)) >= best, since c(G - S) is bounded
/// by both. Inside a class the cuts are explored depth first in increasing
/// bitmask order, deciding vertices from n - 1 down to 0, and a partial
/// assignment is abandoned when its component upper bound cannot beat the
/// incumbent.
std::optional<ToughnessResult> exact_toughness(const Graph& g, const ToughnessOptions& opts = {});

/// |S| / c(G - S), or nullopt when c(G - S) <= 1. Throws SNotProper if S = V.
std::optional<Rational> toughness_of_cut(const Graph& g, VertexSet cut);

/// t(G) >= k, stopping at the first cut with |S| < k c(G - S).
bool is_k_tough(const Graph& g, const Rational& k, const ToughnessOptions& opts = {});

/// Size of a maximum independent set of G[within].
int independence_number(const Graph& g, VertexSet within);
inline int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

}  // namespace toughlab
