#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "toughlab/vertex_set.hpp"

namespace toughlab {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1 with one adjacency
/// word per vertex.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges collapse; self-loops and out-of-range endpoints throw.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return m_; }
  VertexSet vertices() const { return VertexSet::prefix(num_vertices()); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return neighbors(v).size(); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }

  /// Union of the neighborhoods of every vertex in `s`.
  VertexSet neighborhood(VertexSet s) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
  int m_ = 0;
};

/// Connected components of G - removed, ordered by size then smallest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet removed = {});

/// Number of components of G - removed, without materializing them.
int component_count(const Graph& g, VertexSet removed = {});

/// Ordered incidences between A and B; edges inside A and B count twice.
long e_between(const Graph& g, VertexSet a, VertexSet b);

long e_within(const Graph& g, VertexSet a);

struct Regularity {
  std::optional<int> degree;
  /// First vertex whose degree differs from vertex 0's; -1 when regular.
  int violating_vertex = -1;

  bool regular() const { return degree.has_value(); }
};

Regularity regularity(const Graph& g);

bool is_connected(const Graph& g);

template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const Graph& g) {
  const int n = g.num_vertices();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a(u, v) = Scalar(1);
  return a;
}

}  // namespace toughlab
