#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toughlab/graph.hpp"

namespace toughlab {

Graph cycle(int n);
Graph complete(int n);
/// Balanced only: K_{a,b} with a != b is rejected with InvalidParams.
Graph complete_bipartite(int a, int b);
Graph hypercube(int k);
/// Vertices are the k-subsets of {0..n-1} in colex order.
Graph kneser(int n, int k);
Graph petersen();
/// Vertex i is joined to i +- s (mod n) for every offset s in [1, n/2].
Graph circulant(int n, const std::vector<int>& offsets);

inline constexpr int kDefaultPairingAttempts = 1000;

/// Connected simple d-regular graph from the pairing model with rejection.
/// Identical (n, d, seed) always give the identical graph.
Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts = kDefaultPairingAttempts);

enum class Family { Cycle, Complete, CompleteBipartite, Hypercube, Kneser, Petersen, Circulant, RandomRegular };

struct FamilySpec {
  Family family = Family::Cycle;
  std::vector<int> params;
  std::optional<std::uint64_t> seed;

  /// Canonical text form, e.g. "kneser 5 2" or "random_regular 8 3 seed=1".
  std::string to_string() const;
};

std::string_view family_name(Family f);

/// Parses "<family> <int>... [seed=<int>]"; throws ParseError.
FamilySpec parse_family_spec(std::string_view line);

/// Throws InvalidParams when the parameters do not fit the family.
Graph make_graph(const FamilySpec& spec);

}  // namespace toughlab
