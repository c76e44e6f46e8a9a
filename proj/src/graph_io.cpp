#include "toughlab/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "toughlab/error.hpp"

namespace toughlab {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int sextet(char ch) {
  const int value = static_cast<unsigned char>(ch) - 63;
  if (value < 0 || value > 63)
    throw Error(ErrorCode::MalformedGraph6, std::string("invalid character '") + ch + "'");
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw Error(ErrorCode::MalformedGraph6, "empty input");

  std::size_t pos = 0;
  long n = 0;
  if (line[0] != '~') {
    n = sextet(line[0]);
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == '~')
      throw Error(ErrorCode::MalformedGraph6, "unsupported or truncated size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(line[i]);
    if (n < 63) throw Error(ErrorCode::MalformedGraph6, "non-canonical size header");
    pos = 4;
  }
  if (n > kMaxVertices)
    throw Error(ErrorCode::TooManyVertices, "graph6 declares " + std::to_string(n) + " vertices");

  const long bit_count = n * (n - 1) / 2;
  const long expected = (bit_count + 5) / 6;
  if (static_cast<long>(line.size() - pos) != expected)
    throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(expected) + " data bytes, got " +
                                                std::to_string(line.size() - pos));

  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(line[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero in canonical output.
  if (k % 6 != 0) {
    const int last = sextet(line.back());
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0)
      throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = 0;
  long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorCode::ParseError, "edge list header must be \"n m\"");
  if (n > kMaxVertices)
    throw Error(ErrorCode::TooManyVertices, "edge list declares " + std::to_string(n) + " vertices");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) throw Error(ErrorCode::ParseError, "edge list truncated at edge " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::EndpointOutOfRange,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") with n = " + std::to_string(n));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::ParseError, "trailing content after " + std::to_string(m) + " edges");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph_auto(std::string_view text) {
  std::string_view rest = text;
  std::string_view first;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    first = trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    if (!first.empty()) break;
  }
  if (first.empty()) throw Error(ErrorCode::ParseError, "input is empty");

  std::istringstream header{std::string(first)};
  long a = 0;
  long b = 0;
  std::string extra;
  if (header >> a >> b && !(header >> extra)) return parse_edge_list(text);

  if (!trim(rest).empty()) throw Error(ErrorCode::ParseError, "graph6 input must be a single line");
  return parse_graph6(first);
}

}  // namespace toughlab
