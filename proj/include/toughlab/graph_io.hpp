#pragma once

#include <string>
#include <string_view>

#include "toughlab/graph.hpp"

namespace toughlab {

/// Standard graph6 encoding; an optional ">>graph6<<" header and trailing
/// whitespace are accepted.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// "n m" on the first line, then m lines "u v" with 0-based endpoints.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Edge-list when the first non-blank line is two integers, graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

}  // namespace toughlab
