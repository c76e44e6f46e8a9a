#include "toughlab/graph.hpp"

#include <algorithm>
#include <string>

#include "toughlab/error.hpp"

namespace toughlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NonpositiveLambda: return "NonpositiveLambda";
    case ErrorCode::ToughnessUndefined: return "ToughnessUndefined";
    case ErrorCode::SNotProper: return "SNotProper";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxVertices)
    throw Error(ErrorCode::TooManyVertices,
                "vertex count " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::EndpointOutOfRange,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") with n = " + std::to_string(n));
    if (u == v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].insert(v);
    g.adj_[static_cast<std::size_t>(v)].insert(u);
  }
  int degree_sum = 0;
  for (VertexSet row : g.adj_) degree_sum += row.size();
  g.m_ = degree_sum / 2;
  return g;
}

VertexSet Graph::neighborhood(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= adj_[static_cast<std::size_t>(v)];
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

VertexSet grow_component(const Graph& g, int seed, VertexSet allowed) {
  VertexSet comp = VertexSet::singleton(seed);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next = g.neighborhood(frontier) & allowed;
    next -= comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    VertexSet comp = grow_component(g, rest.lowest(), rest);
    out.push_back(comp);
    rest -= comp;
  }
  std::stable_sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.lowest() < b.lowest();
  });
  return out;
}

int component_count(const Graph& g, VertexSet removed) {
  int count = 0;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    rest -= grow_component(g, rest.lowest(), rest);
    ++count;
  }
  return count;
}

long e_between(const Graph& g, VertexSet a, VertexSet b) {
  long total = 0;
  for (int u : a) total += (g.neighbors(u) & b).size();
  return total;
}

long e_within(const Graph& g, VertexSet a) { return e_between(g, a, a) / 2; }

Regularity regularity(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return {0, -1};
  const int d = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != d) return {std::nullopt, v};
  return {d, -1};
}

bool is_connected(const Graph& g) { return g.num_vertices() >= 1 && component_count(g) == 1; }

}  // namespace toughlab
