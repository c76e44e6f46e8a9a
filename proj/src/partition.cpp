#include "toughlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "toughlab/error.hpp"

namespace toughlab {

namespace {

[[noreturn]] void violated(const std::string& what) { throw Error(ErrorCode::PreconditionViolated, what); }

long total(std::span<const int> xs) { return std::accumulate(xs.begin(), xs.end(), 0L); }

// xs sorted ascending; `positions` maps sorted slots back to caller indices.
void induct(std::span<const int> xs, std::span<const int> positions, int ell, std::vector<int>& out) {
  const int c = static_cast<int>(xs.size());
  if (c == 1) {
    if (ell == xs[0]) out.push_back(positions[0]);
    return;
  }
  if (ell <= c - 1) {
    induct(xs.first(static_cast<std::size_t>(c - 1)), positions, ell, out);
  } else {
    out.push_back(positions[static_cast<std::size_t>(c - 1)]);
    induct(xs.first(static_cast<std::size_t>(c - 1)), positions, ell - xs[static_cast<std::size_t>(c - 1)], out);
  }
}

std::vector<int> sizes_of(std::span<const VertexSet> comps) {
  std::vector<int> sizes;
  sizes.reserve(comps.size());
  for (VertexSet s : comps) sizes.push_back(s.size());
  return sizes;
}

}  // namespace

std::vector<int> index_subset(std::span<const int> xs, int ell) {
  if (xs.empty()) violated("empty size vector");
  const long c = static_cast<long>(xs.size());
  for (int x : xs)
    if (x < 1) violated("entries must be positive");
  const long sum = total(xs);
  if (sum > 2 * c - 1) violated("sum " + std::to_string(sum) + " exceeds 2c - 1 = " + std::to_string(2 * c - 1));
  if (ell < 0 || ell > sum) violated("target " + std::to_string(ell) + " outside [0, " + std::to_string(sum) + "]");

  std::vector<int> positions(xs.size());
  std::iota(positions.begin(), positions.end(), 0);
  std::stable_sort(positions.begin(), positions.end(), [&](int i, int j) {
    return xs[static_cast<std::size_t>(i)] < xs[static_cast<std::size_t>(j)];
  });
  std::vector<int> sorted;
  sorted.reserve(xs.size());
  for (int p : positions) sorted.push_back(xs[static_cast<std::size_t>(p)]);

  std::vector<int> out;
  induct(sorted, positions, ell, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool check_claim1_hypothesis(std::span<const int> sizes) {
  if (sizes.empty()) return false;
  const long c = static_cast<long>(sizes.size());
  return total(sizes.first(sizes.size() - 1)) >= c;
}

bool check_claim1_hypothesis(std::span<const VertexSet> comps) {
  const std::vector<int> sizes = sizes_of(comps);
  return check_claim1_hypothesis(std::span<const int>(sizes));
}

PartitionWitness claim2_partition(const Graph& g, std::span<const VertexSet> comps) {
  const int c = static_cast<int>(comps.size());
  if (c < 2) violated("need at least two components, got " + std::to_string(c));
  const std::vector<int> sizes = sizes_of(comps);
  VertexSet seen;
  for (int i = 0; i < c; ++i) {
    if (comps[static_cast<std::size_t>(i)].empty()) violated("component " + std::to_string(i) + " is empty");
    if (!(comps[static_cast<std::size_t>(i)] & seen).empty()) violated("components overlap");
    if (!comps[static_cast<std::size_t>(i)].is_subset_of(g.vertices())) violated("component outside the graph");
    seen |= comps[static_cast<std::size_t>(i)];
    if (i > 0 && sizes[static_cast<std::size_t>(i)] < sizes[static_cast<std::size_t>(i - 1)])
      violated("components must be ascending by size");
  }
  const long sum = total(sizes);
  if (sum < 2L * c + 1)
    violated("|B| = " + std::to_string(sum) + " is below 2c + 1 = " + std::to_string(2 * c + 1));

  const int largest = sizes.back();
  const std::span<const int> small = std::span<const int>(sizes).first(static_cast<std::size_t>(c - 1));
  const long small_sum = total(small);

  PartitionWitness w;
  if (largest >= c) {
    if (small_sum < c)
      violated("largest component has >= c vertices but the others hold " + std::to_string(small_sum) + " < c");
    w.kind = PartitionCase::LargestAlone;
    w.y = comps.back();
    for (int i = 0; i < c - 1; ++i) w.x |= comps[static_cast<std::size_t>(i)];
  } else {
    const int ell = c - largest;
    std::vector<int> chosen;
    if (small_sum <= 2L * c - 3) {
      w.kind = PartitionCase::Direct;
      chosen = index_subset(small, ell);
    } else {
      w.kind = PartitionCase::Trimmed;
      std::vector<int> trimmed(small.begin(), small.end());
      for (long excess = small_sum - (2L * c - 3); excess > 0; --excess) {
        // Largest entry first, lowest index on ties.
        const auto it = std::max_element(trimmed.begin(), trimmed.end());
        --*it;
      }
      chosen = index_subset(trimmed, ell);
      long unchosen = 0;
      for (int i = 0; i < c - 1; ++i)
        if (!std::binary_search(chosen.begin(), chosen.end(), i)) unchosen += trimmed[static_cast<std::size_t>(i)];
      if (unchosen != 2L * c - 3 - ell || unchosen < c)
        throw Error(ErrorCode::PreconditionViolated, "trimmed remainder " + std::to_string(unchosen) +
                                                         " does not reach c = " + std::to_string(c));
    }
    w.x = comps.back();
    for (int i : chosen) w.x |= comps[static_cast<std::size_t>(i)];
    w.y = seen - w.x;
  }
  w.size_x = w.x.size();
  w.size_y = w.y.size();
  w.cross_edges = e_between(g, w.x, w.y);
  return w;
}

}  // namespace toughlab
