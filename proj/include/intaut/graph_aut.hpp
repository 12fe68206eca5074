#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intaut/affine_space.hpp"
#include "intaut/permutation.hpp"

namespace intaut {

using BigInt = boost::multiprecision::cpp_int;

/// Simple undirected graph as an adjacency bit matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::uint32_t num_vertices);

  std::uint32_t num_vertices() const noexcept { return n_; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const noexcept {
    return (bits_[std::size_t{u} * words_ + v / 64] >> (v % 64)) & 1u;
  }
  /// Adds or removes {u, v}; loops are rejected with DimensionMismatch.
  void set_edge(std::uint32_t u, std::uint32_t v, bool present = true);
  void toggle_edge(std::uint32_t u, std::uint32_t v) { set_edge(u, v, !adjacent(u, v)); }

  std::uint32_t degree(std::uint32_t v) const noexcept;
  std::uint64_t num_edges() const noexcept;
  /// Ascending neighbour list.
  std::vector<std::uint32_t> neighbors(std::uint32_t v) const;
  std::optional<std::uint32_t> regular_degree() const noexcept;

  Graph complement() const;
  static Graph complete(std::uint32_t num_vertices);

  /// Edge-preserving in both directions (checked over all pairs).
  bool is_automorphism(const PointPermutation& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Vertex k is point_of_index(k); {u, v} is an edge iff u != v and d(u, v)
/// is a square (zero included).
struct IntegralGraph {
  Graph graph;
  FieldRef field;
  unsigned dim = 0;
};

IntegralGraph build_integral_graph(const AffineSpace& space);

/// colors[v] for every vertex.
using Coloring = std::vector<std::uint32_t>;

/// Coarsest equitable refinement of `initial`. Colors are renumbered in
/// order of first appearance when scanning vertices 0, 1, 2, ...
Coloring refine_coloring(const Graph& graph, const Coloring& initial);

struct AutGroupResult {
  BigInt order;
  std::vector<PointPermutation> generators;
  /// Vertices individualized along the first path.
  std::vector<std::uint32_t> base;
  /// |orbit of base[k] under the pointwise stabilizer of base[0..k)|.
  std::vector<std::uint64_t> orbit_lengths;
  std::uint64_t node_count = 0;
};

/// Automorphism group by individualization and refinement. The first path
/// fixes a base; for each level, deepest first, every vertex of the target
/// cell outside the known orbit of the base point is tested for an
/// automorphism extending the fixed prefix, pruning with orbits of the
/// generators found so far. The order is the product of the base orbit
/// lengths. Every generator is re-verified against all edges; a failure
/// throws InternalInconsistency.
AutGroupResult automorphism_group(const Graph& graph, const Coloring& initial = {});

enum class Verdict { Equal, StrictlyLarger, Violation };

std::string_view to_string(Verdict v) noexcept;

struct ClassificationReport {
  BigInt aut_order;
  std::uint64_t semiaffine_order = 0;
  std::uint64_t orthogonal_count = 0;
  bool semiaffine_contained = false;
  Verdict verdict = Verdict::Violation;
  /// n >= 3, or n = 2 with q = 3 (mod 4): Equal. n = 2 with q = 1 (mod 4):
  /// StrictlyLarger. No prediction for n = 1.
  std::optional<Verdict> predicted;
  /// Automorphism generators that are not semiaffine, one per coset found.
  std::vector<PointPermutation> extra_generators;
  AutGroupResult aut;

  bool as_predicted() const noexcept { return predicted && *predicted == verdict; }
};

std::optional<Verdict> predicted_verdict(std::uint32_t q, unsigned n);

ClassificationReport verify_classification(const AffineSpace& space);
/// Same, against a caller-supplied graph (the CLI's corruption hook uses this).
ClassificationReport verify_classification(const AffineSpace& space, const Graph& graph);

enum class GraphFormat { Graph6, Dimacs };

/// graph6: size header then the upper triangle column by column, six bits
/// per byte offset by 63, newline-terminated. DIMACS: "p edge N M" then
/// "e u v" lines with 1-based u < v in ascending order.
std::string export_graph(const Graph& graph, GraphFormat format);
Graph import_graph(std::string_view text, GraphFormat format);

}  // namespace intaut
