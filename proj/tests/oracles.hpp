#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// shares code with the library beyond the Graph container and its edge list.

#include <cstdint>
#include <optional>
#include <vector>

#include "toughlab/graph.hpp"

namespace oracle {

struct NaiveToughness {
  std::int64_t cut_size = 0;
  std::int64_t components = 0;
  std::uint64_t witness = 0;
};

/// Components of G - removed by depth-first search over adjacency lists.
int count_components(const toughlab::Graph& g, std::uint64_t removed);

/// Minimum |S|/c(G-S) over all 2^n subsets, no pruning. Among minimizers
/// keeps the smallest |S|, then the smallest bitmask.
std::optional<NaiveToughness> naive_toughness(const toughlab::Graph& g);

/// Max c(G - S) over proper S, scanning all subsets.
int naive_max_components(const toughlab::Graph& g);

/// Edge-list count of ordered pairs (u in A, v in B) with uv an edge.
long naive_e_between(const toughlab::Graph& g, std::uint64_t a, std::uint64_t b);

/// Maximum independent set size by full enumeration.
int naive_independence_number(const toughlab::Graph& g);

/// Does some subset of xs sum to target.
bool subset_sum_feasible(const std::vector<int>& xs, int target);

/// All eigenvalues of circulant(n, offsets): sum_s 2 cos(2 pi j s / n).
std::vector<double> circulant_spectrum(int n, const std::vector<int>& offsets);

/// Disjoint cliques of the given sizes on consecutive labels; `comps`
/// receives each clique's vertex set in input order.
toughlab::Graph disjoint_cliques(const std::vector<int>& sizes, std::vector<toughlab::VertexSet>& comps);

}  // namespace oracle
