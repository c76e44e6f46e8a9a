#include "toughlab/toughness.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "toughlab/error.hpp"

namespace toughlab {

namespace {

int independence_rec(const Graph& g, VertexSet w) {
  if (w.empty()) return 0;
  int min_v = -1;
  int min_deg = kMaxVertices + 1;
  int max_v = -1;
  int max_deg = -1;
  for (int v : w) {
    const int deg = (g.neighbors(v) & w).size();
    if (deg < min_deg) {
      min_deg = deg;
      min_v = v;
    }
    if (deg > max_deg) {
      max_deg = deg;
      max_v = v;
    }
  }
  // A vertex of degree <= 1 belongs to some maximum independent set.
  if (min_deg <= 1) return 1 + independence_rec(g, w - (g.neighbors(min_v) | VertexSet::singleton(min_v)));
  const int without = independence_rec(g, w - VertexSet::singleton(max_v));
  const int with = 1 + independence_rec(g, w - (g.neighbors(max_v) | VertexSet::singleton(max_v)));
  return std::max(without, with);
}

int count_components_within(const Graph& g, VertexSet allowed) {
  return component_count(g, g.vertices() - allowed);
}

void require_searchable(const Graph& g, const ToughnessOptions& opts) {
  const int n = g.num_vertices();
  if (n < 2) throw Error(ErrorCode::TooFewVertices, "toughness needs n >= 2");
  if (n > opts.max_n)
    throw Error(ErrorCode::TooLarge, "exact toughness capped at n = " + std::to_string(opts.max_n) + ", got " +
                                         std::to_string(n));
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "toughness is defined for connected graphs");
}

// Searches the cuts of one fixed size for the largest component count that
// is at least `need`.
class SizeClassSearch {
 public:
  SizeClassSearch(const Graph& g, int cut_size, int need, const std::vector<int>& alpha_prefix, bool stop_at_first)
      : g_(g),
        n_(g.num_vertices()),
        cut_size_(cut_size),
        ceiling_(std::min(g.num_vertices() - cut_size, alpha_prefix.back())),
        floor_(need - 1),
        alpha_prefix_(alpha_prefix),
        stop_at_first_(stop_at_first) {}

  bool run() {
    descend(n_, VertexSet{}, VertexSet{});
    return best_components_ > 0;
  }

  int best_components() const { return best_components_; }
  VertexSet best_cut() const { return best_cut_; }

 private:
  bool done() const { return best_components_ > 0 && (stop_at_first_ || floor_ >= ceiling_); }

  void record(int c, VertexSet cut) {
    if (c > floor_) {
      floor_ = c;
      best_components_ = c;
      best_cut_ = cut;
    }
  }

  // Vertices pos..n-1 are decided: `cut` holds those in S, `kept` the rest.
  void descend(int pos, VertexSet cut, VertexSet kept) {
    const int remaining = cut_size_ - cut.size();
    if (remaining < 0 || remaining > pos) return;
    const VertexSet undecided = VertexSet::prefix(pos);

    if (remaining == pos) {
      const VertexSet full_cut = cut | undecided;
      record(count_components_within(g_, kept), full_cut);
      return;
    }
    if (remaining == 0) {
      record(count_components_within(g_, kept | undecided), cut);
      return;
    }

    // Components meeting `kept` can only merge later. Components that lie
    // wholly in the undecided part avoid N(kept) and contribute pairwise
    // non-adjacent representatives.
    const VertexSet free = undecided - g_.neighborhood(kept);
    const int fresh = std::min({free.size(), pos - remaining, alpha_prefix_[static_cast<std::size_t>(pos)]});
    const int upper = count_components_within(g_, kept) + fresh;
    if (upper <= floor_) return;

    const int v = pos - 1;
    descend(v, cut, kept | VertexSet::singleton(v));
    if (done()) return;
    descend(v, cut | VertexSet::singleton(v), kept);
  }

  const Graph& g_;
  int n_;
  int cut_size_;
  int ceiling_;
  int floor_;
  const std::vector<int>& alpha_prefix_;
  bool stop_at_first_;
  int best_components_ = 0;
  VertexSet best_cut_;
};

std::vector<int> prefix_independence(const Graph& g) {
  std::vector<int> alpha(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (int pos = 1; pos <= g.num_vertices(); ++pos)
    alpha[static_cast<std::size_t>(pos)] = independence_number(g, VertexSet::prefix(pos));
  return alpha;
}

// Smallest c with c * k > s, i.e. floor(s / k) + 1, for k > 0.
int components_needed(int s, const Rational& k) {
  const wide_int q = static_cast<wide_int>(s) * k.den() / k.num();
  return static_cast<int>(q) + 1;
}

}  // namespace

int independence_number(const Graph& g, VertexSet within) { return independence_rec(g, within & g.vertices()); }

std::optional<ToughnessResult> exact_toughness(const Graph& g, const ToughnessOptions& opts) {
  require_searchable(g, opts);
  const int n = g.num_vertices();
  const std::vector<int> alpha_prefix = prefix_independence(g);
  const int alpha = alpha_prefix.back();
  if (alpha < 2) return std::nullopt;

  std::optional<ToughnessResult> best;
  for (int s = 1; s <= n - 2; ++s) {
    const int ceiling = std::min(n - s, alpha);
    if (best && Rational(s, ceiling) >= best->t) break;
    const int need = best ? std::max(2, components_needed(s, best->t)) : 2;
    if (need > ceiling) continue;

    SizeClassSearch search(g, s, need, alpha_prefix, /*stop_at_first=*/false);
    if (search.run()) best = ToughnessResult{Rational(s, search.best_components()), search.best_cut(),
                                             search.best_components()};
  }
  return best;
}

std::optional<Rational> toughness_of_cut(const Graph& g, VertexSet cut) {
  if (!cut.is_subset_of(g.vertices()))
    throw Error(ErrorCode::EndpointOutOfRange, "cut contains vertices outside the graph");
  if (cut == g.vertices()) throw Error(ErrorCode::SNotProper, "S must be a proper subset of V");
  const int c = component_count(g, cut);
  if (c <= 1) return std::nullopt;
  return Rational(cut.size(), c);
}

bool is_k_tough(const Graph& g, const Rational& k, const ToughnessOptions& opts) {
  require_searchable(g, opts);
  if (k.num() <= 0) return true;
  const int n = g.num_vertices();
  const std::vector<int> alpha_prefix = prefix_independence(g);
  const int alpha = alpha_prefix.back();
  if (alpha < 2) return true;

  for (int s = 1; s <= n - 2; ++s) {
    const int ceiling = std::min(n - s, alpha);
    if (Rational(s, ceiling) >= k) break;
    const int need = std::max(2, components_needed(s, k));
    if (need > ceiling) continue;
    SizeClassSearch search(g, s, need, alpha_prefix, /*stop_at_first=*/true);
    if (search.run()) return false;
  }
  return true;
}

}  // namespace toughlab
