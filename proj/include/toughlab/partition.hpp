#pragma once

#include <span>
#include <vector>

#include "toughlab/graph.hpp"

namespace toughlab {

/// Positions I with sum_{i in I} xs[i] == ell, for positive xs with
/// sum(xs) <= 2 c - 1 and 0 <= ell <= sum(xs). Indices are 0-based positions
/// in `xs` as given, returned ascending. The entries are ordered by value
/// (ties by position) and the choice follows the induction on c: keep the
/// target when it is at most c - 1, otherwise spend the largest entry.
/// Throws PreconditionViolated.
std::vector<int> index_subset(std::span<const int> xs, int ell);

enum class PartitionCase {
  /// The largest component alone is big enough.
  LargestAlone,
  /// Small components are sparse enough for the index lemma directly.
  Direct,
  /// Small components are trimmed to total 2c - 3 first.
  Trimmed,
};

struct PartitionWitness {
  VertexSet x;
  VertexSet y;
  int size_x = 0;
  int size_y = 0;
  /// e(X, Y) measured on the graph.
  long cross_edges = 0;
  PartitionCase kind = PartitionCase::LargestAlone;
};

/// True iff the components other than the largest hold at least c vertices.
bool check_claim1_hypothesis(std::span<const VertexSet> comps);
bool check_claim1_hypothesis(std::span<const int> sizes);

/// Splits the components of some G - S (ascending by size, c >= 2, at least
/// 2c + 1 vertices in total) into unions X and Y with |X| >= c and |Y| >= c.
/// When the largest component has >= c vertices the remaining ones must
/// total >= c as well. Throws PreconditionViolated naming the failed condition.
PartitionWitness claim2_partition(const Graph& g, std::span<const VertexSet> comps);

}  // namespace toughlab
