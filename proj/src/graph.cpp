#include <algorithm>
#include <sstream>

#include "intaut/graph_aut.hpp"

namespace intaut {

Graph::Graph(std::uint32_t num_vertices)
    : n_(num_vertices), words_((num_vertices + 63) / 64), bits_(std::size_t{num_vertices} * words_, 0) {}

void Graph::set_edge(std::uint32_t u, std::uint32_t v, bool present) {
  if (u >= n_ || v >= n_) throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
  if (u == v) throw Error(ErrorCode::DimensionMismatch, "loops are not allowed");
  const auto set = [&](std::uint32_t a, std::uint32_t b) {
    auto& word = bits_[std::size_t{a} * words_ + b / 64];
    const std::uint64_t mask = std::uint64_t{1} << (b % 64);
    word = present ? (word | mask) : (word & ~mask);
  };
  set(u, v);
  set(v, u);
}

std::uint32_t Graph::degree(std::uint32_t v) const noexcept {
  std::uint32_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::uint32_t>(__builtin_popcountll(bits_[v * words_ + w]));
  return d;
}

std::uint64_t Graph::num_edges() const noexcept {
  std::uint64_t twice = 0;
  for (std::uint32_t v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::uint32_t> Graph::neighbors(std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

std::optional<std::uint32_t> Graph::regular_degree() const noexcept {
  if (n_ == 0) return 0;
  const std::uint32_t d = degree(0);
  for (std::uint32_t v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

Graph Graph::complement() const {
  Graph out(n_);
  for (std::uint32_t u = 0; u < n_; ++u)
    for (std::uint32_t v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) out.set_edge(u, v);
  return out;
}

Graph Graph::complete(std::uint32_t num_vertices) {
  Graph out(num_vertices);
  for (std::uint32_t u = 0; u < num_vertices; ++u)
    for (std::uint32_t v = u + 1; v < num_vertices; ++v) out.set_edge(u, v);
  return out;
}

bool Graph::is_automorphism(const PointPermutation& perm) const {
  if (perm.size() != n_) return false;
  for (std::uint32_t u = 0; u < n_; ++u)
    for (std::uint32_t v = u + 1; v < n_; ++v)
      if (adjacent(u, v) != adjacent(perm[u], perm[v])) return false;
  return true;
}

IntegralGraph build_integral_graph(const AffineSpace& space) {
  IntegralGraph out{Graph(space.size()), space.field(), space.n()};
  for (PointIndex u = 0; u < space.size(); ++u)
    for (PointIndex v = u + 1; v < space.size(); ++v)
      if (space.is_integral(u, v)) out.graph.set_edge(u, v);
  return out;
}

namespace {

void graph6_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

std::string to_graph6(const Graph& g) {
  std::string out;
  graph6_size(out, g.num_vertices());
  int filled = 0;
  unsigned char acc = 0;
  for (std::uint32_t j = 1; j < g.num_vertices(); ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(i, j) ? 1 : 0));
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  out.push_back('\n');
  return out;
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (std::uint32_t u = 0; u < g.num_vertices(); ++u)
    for (std::uint32_t v = u + 1; v < g.num_vertices(); ++v)
      if (g.adjacent(u, v)) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  std::size_t pos = 0;
  const auto next = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw Error(ErrorCode::ParseError, "graph6 data truncated");
    const auto c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw Error(ErrorCode::ParseError, "graph6 byte out of range");
    return c - 63u;
  };
  std::uint64_t n = next();
  if (n == 63) {
    int digits = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      digits = 6;
    }
    n = 0;
    for (int k = 0; k < digits; ++k) n = (n << 6) | next();
  }
  if (n > UINT32_MAX) throw Error(ErrorCode::UnsupportedSize, "graph too large");
  Graph g(static_cast<std::uint32_t>(n));
  std::uint64_t chunk = 0;
  int left = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      if (left == 0) {
        chunk = next();
        left = 6;
      }
      --left;
      if ((chunk >> left) & 1) g.set_edge(i, j);
    }
  }
  if (pos != text.size()) throw Error(ErrorCode::ParseError, "trailing graph6 data");
  return g;
}

Graph from_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<Graph> g;
  std::uint64_t declared_edges = 0;
  for (std::string line; std::getline(in, line);) {
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind) || kind == "c") continue;
    if (kind == "p") {
      std::string format;
      std::uint64_t n = 0;
      if (!(tokens >> format >> n >> declared_edges) || g)
        throw Error(ErrorCode::ParseError, "bad DIMACS problem line");
      if (n > UINT32_MAX) throw Error(ErrorCode::UnsupportedSize, "graph too large");
      g.emplace(static_cast<std::uint32_t>(n));
    } else if (kind == "e") {
      std::uint64_t u = 0, v = 0;
      if (!g || !(tokens >> u >> v) || u == 0 || v == 0 || u > g->num_vertices() || v > g->num_vertices())
        throw Error(ErrorCode::ParseError, "bad DIMACS edge line: " + line);
      g->set_edge(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1));
    } else {
      throw Error(ErrorCode::ParseError, "unknown DIMACS line: " + line);
    }
  }
  if (!g) throw Error(ErrorCode::ParseError, "missing DIMACS problem line");
  if (g->num_edges() != declared_edges) throw Error(ErrorCode::ParseError, "DIMACS edge count mismatch");
  return *g;
}

}  // namespace

std::string export_graph(const Graph& graph, GraphFormat format) {
  // 32-bit vertex counts are always within graph6's 68719476735 limit.
  return format == GraphFormat::Graph6 ? to_graph6(graph) : to_dimacs(graph);
}

Graph import_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? from_graph6(text) : from_dimacs(text);
}

}  // namespace intaut
