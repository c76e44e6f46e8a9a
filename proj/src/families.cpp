#include "toughlab/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

#include "toughlab/error.hpp"

namespace toughlab {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidParams, what); }

void require_order(int n) {
  if (n > kMaxVertices) invalid(std::to_string(n) + " vertices exceeds the limit of " + std::to_string(kMaxVertices));
}

// Uniform draw from [0, bound) that does not depend on the standard
// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Graph cycle(int n) {
  if (n < 3) invalid("cycle needs n >= 3, got " + std::to_string(n));
  require_order(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph complete(int n) {
  if (n < 1) invalid("complete needs n >= 1, got " + std::to_string(n));
  require_order(n);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) invalid("complete_bipartite needs sides >= 1");
  if (a != b) invalid("only balanced complete_bipartite graphs are regular; got " + std::to_string(a) + ", " +
                      std::to_string(b));
  require_order(2 * a);
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < a; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edge_list(2 * a, edges);
}

Graph hypercube(int k) {
  if (k < 1 || k > 6) invalid("hypercube dimension must lie in [1, 6], got " + std::to_string(k));
  const int n = 1 << k;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int bit = 0; bit < k; ++bit)
      if (const int v = u ^ (1 << bit); u < v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph kneser(int n, int k) {
  if (k < 1 || n < 2 * k + 1) invalid("kneser needs k >= 1 and n >= 2k + 1");
  if (n > 63 || binomial(n, k) > kMaxVertices) invalid("kneser(" + std::to_string(n) + ", " + std::to_string(k) +
                                                       ") has too many vertices");
  // Increasing bitmasks of equal popcount enumerate k-subsets in colex order.
  std::vector<std::uint64_t> subsets;
  const std::uint64_t last = ((std::uint64_t{1} << k) - 1) << (n - k);
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1;; ) {
    subsets.push_back(x);
    if (x == last) break;
    const std::uint64_t low = x & (0 - x);
    const std::uint64_t ripple = x + low;
    x = ripple | (((x ^ ripple) >> 2) / low);
  }
  std::vector<Edge> edges;
  const int count = static_cast<int>(subsets.size());
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if ((subsets[static_cast<std::size_t>(i)] & subsets[static_cast<std::size_t>(j)]) == 0) edges.emplace_back(i, j);
  return Graph::from_edge_list(count, edges);
}

Graph petersen() { return kneser(5, 2); }

Graph circulant(int n, const std::vector<int>& offsets) {
  if (n < 1) invalid("circulant needs n >= 1");
  require_order(n);
  std::vector<Edge> edges;
  for (int s : offsets) {
    if (s < 1 || 2 * s > n) invalid("circulant offset " + std::to_string(s) + " outside [1, n/2]");
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + s) % n);
  }
  return Graph::from_edge_list(n, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts) {
  if (n < 1 || d < 1 || d >= n) invalid("random_regular needs 1 <= d < n");
  if ((n * d) % 2 != 0) invalid("random_regular needs n*d even, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  require_order(n);

  std::mt19937_64 rng(seed);
  std::vector<int> points(static_cast<std::size_t>(n * d));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / d;
    for (std::size_t i = points.size() - 1; i > 0; --i)
      std::swap(points[i], points[uniform_below(rng, i + 1)]);

    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    bool simple = true;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const int u = points[i];
      const int v = points[i + 1];
      if (u == v || adj[static_cast<std::size_t>(u)].contains(v)) simple = false;
      adj[static_cast<std::size_t>(u)].insert(v);
      adj[static_cast<std::size_t>(v)].insert(u);
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!simple) continue;
    Graph g = Graph::from_edge_list(n, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::RetriesExhausted, "no connected simple " + std::to_string(d) + "-regular graph on " +
                                               std::to_string(n) + " vertices after " + std::to_string(max_attempts) +
                                               " pairings");
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::Cycle, "cycle"},
    {Family::Complete, "complete"},
    {Family::CompleteBipartite, "complete_bipartite"},
    {Family::Hypercube, "hypercube"},
    {Family::Kneser, "kneser"},
    {Family::Petersen, "petersen"},
    {Family::Circulant, "circulant"},
    {Family::RandomRegular, "random_regular"},
}};

template <typename Int>
bool parse_int(std::string_view text, Int& out) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

void require_arity(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.params.size() < lo || spec.params.size() > hi)
    invalid(std::string(family_name(spec.family)) + " takes " + std::to_string(lo) +
            (lo == hi ? "" : ".." + std::to_string(hi)) + " parameters, got " + std::to_string(spec.params.size()));
}

}  // namespace

std::string_view family_name(Family f) {
  for (auto [family, name] : kFamilyNames)
    if (family == f) return name;
  return "unknown";
}

std::string FamilySpec::to_string() const {
  std::string out(family_name(family));
  for (int p : params) out += " " + std::to_string(p);
  if (seed) out += " seed=" + std::to_string(*seed);
  return out;
}

FamilySpec parse_family_spec(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string word;
  if (!(in >> word)) throw Error(ErrorCode::ParseError, "empty family spec");

  FamilySpec spec;
  const auto it = std::find_if(kFamilyNames.begin(), kFamilyNames.end(), [&](auto& e) { return e.second == word; });
  if (it == kFamilyNames.end()) throw Error(ErrorCode::ParseError, "unknown family '" + word + "'");
  spec.family = it->first;

  while (in >> word) {
    if (word.starts_with("seed=")) {
      std::uint64_t seed = 0;
      if (!parse_int(std::string_view(word).substr(5), seed))
        throw Error(ErrorCode::ParseError, "bad seed '" + word + "'");
      spec.seed = seed;
      continue;
    }
    int value = 0;
    if (!parse_int(std::string_view(word), value)) throw Error(ErrorCode::ParseError, "bad parameter '" + word + "'");
    spec.params.push_back(value);
  }
  return spec;
}

Graph make_graph(const FamilySpec& spec) {
  const auto& p = spec.params;
  if (spec.seed && spec.family != Family::RandomRegular)
    invalid(std::string(family_name(spec.family)) + " does not take a seed");
  switch (spec.family) {
    case Family::Cycle: require_arity(spec, 1, 1); return cycle(p[0]);
    case Family::Complete: require_arity(spec, 1, 1); return complete(p[0]);
    case Family::CompleteBipartite:
      require_arity(spec, 1, 2);
      return complete_bipartite(p[0], p.size() == 2 ? p[1] : p[0]);
    case Family::Hypercube: require_arity(spec, 1, 1); return hypercube(p[0]);
    case Family::Kneser: require_arity(spec, 2, 2); return kneser(p[0], p[1]);
    case Family::Petersen: require_arity(spec, 0, 0); return petersen();
    case Family::Circulant:
      require_arity(spec, 2, kMaxVertices);
      return circulant(p[0], std::vector<int>(p.begin() + 1, p.end()));
    case Family::RandomRegular:
      require_arity(spec, 2, 2);
      if (!spec.seed) invalid("random_regular requires seed=<int>");
      return random_regular(p[0], p[1], *spec.seed);
  }
  invalid("unknown family");
}

}  // namespace toughlab
