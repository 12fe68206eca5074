#include <algorithm>
#include <map>
#include <numeric>

#include "intaut/graph_aut.hpp"

namespace intaut {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

/// An ordered partition: color[v] is the rank of v's cell, ranks 0..cells-1.
struct Node {
  std::vector<std::uint32_t> color;
  std::uint32_t cells = 0;
  /// Hash of the refinement history; equal for nodes related by an automorphism.
  std::uint64_t trace = 0;
};

class Refiner {
 public:
  explicit Refiner(const Graph& g) : adj_(g.num_vertices()) {
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) adj_[v] = g.neighbors(v);
  }

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(adj_.size()); }

  /// Refines in place to the coarsest equitable ordered partition. New
  /// cells are ordered by (old rank, neighbour-color multiset), which
  /// depends only on the structure and never on vertex labels.
  void refine(Node& node) const {
    const std::uint32_t n = size();
    std::vector<std::vector<std::uint32_t>> sig(n);
    std::vector<std::uint32_t> order(n);
    std::vector<std::uint32_t> scratch;
    while (true) {
      for (std::uint32_t v = 0; v < n; ++v) {
        scratch.clear();
        for (auto u : adj_[v]) scratch.push_back(node.color[u]);
        std::sort(scratch.begin(), scratch.end());
        auto& s = sig[v];
        s.clear();
        s.push_back(node.color[v]);
        for (std::size_t k = 0; k < scratch.size();) {
          std::size_t run = k;
          while (run < scratch.size() && scratch[run] == scratch[k]) ++run;
          s.push_back(scratch[k]);
          s.push_back(static_cast<std::uint32_t>(run - k));
          k = run;
        }
      }
      std::iota(order.begin(), order.end(), 0u);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });
      std::uint32_t rank = 0;
      for (std::uint32_t k = 0; k < n; ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++rank;
        if (k == 0 || sig[order[k]] != sig[order[k - 1]]) {
          for (auto x : sig[order[k]]) node.trace = mix(node.trace, x);
        }
        node.trace = mix(node.trace, rank);
      }
      const std::uint32_t cells = n == 0 ? 0 : rank + 1;
      for (std::uint32_t k = 0, r = 0; k < n; ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++r;
        node.color[order[k]] = r;
      }
      node.trace = mix(node.trace, cells);
      const bool stable = cells == node.cells;
      node.cells = cells;
      if (stable) return;
    }
  }

 private:
  std::vector<std::vector<std::uint32_t>> adj_;
};

std::vector<std::uint32_t> cell_members(const Node& node, std::uint32_t rank) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < node.color.size(); ++v)
    if (node.color[v] == rank) out.push_back(v);
  return out;
}

/// First smallest non-singleton cell, or nullopt when the partition is discrete.
std::optional<std::uint32_t> target_cell(const Node& node) {
  std::vector<std::uint32_t> sizes(node.cells, 0);
  for (auto c : node.color) ++sizes[c];
  std::optional<std::uint32_t> best;
  for (std::uint32_t r = 0; r < node.cells; ++r)
    if (sizes[r] > 1 && (!best || sizes[r] < sizes[*best])) best = r;
  return best;
}

Node individualize(const Node& node, std::uint32_t v) {
  Node child;
  child.color = node.color;
  child.cells = node.cells + 1;
  child.trace = mix(node.trace, node.color[v]);
  const std::uint32_t r = node.color[v];
  for (std::uint32_t u = 0; u < child.color.size(); ++u) {
    if (node.color[u] > r || (node.color[u] == r && u != v)) ++child.color[u];
  }
  return child;
}

class UnionFind {
 public:
  explicit UnionFind(std::uint32_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& graph, const Coloring& initial) : graph_(graph), refiner_(graph) {
    const std::uint32_t n = graph.num_vertices();
    Node root;
    root.color.assign(n, 0);
    if (!initial.empty()) {
      if (initial.size() != n) throw Error(ErrorCode::SizeMismatch, "initial coloring size != vertex count");
      std::vector<std::uint32_t> labels(initial.begin(), initial.end());
      std::sort(labels.begin(), labels.end());
      labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
      for (std::uint32_t v = 0; v < n; ++v)
        root.color[v] = static_cast<std::uint32_t>(std::lower_bound(labels.begin(), labels.end(), initial[v]) -
                                                   labels.begin());
      root.cells = static_cast<std::uint32_t>(labels.size());
    } else {
      root.cells = n == 0 ? 0 : 1;
    }
    refine(root);
    first_path_.push_back(std::move(root));
    while (auto cell = target_cell(first_path_.back())) {
      const auto members = cell_members(first_path_.back(), *cell);
      targets_.push_back(*cell);
      base_.push_back(members.front());
      Node child = individualize(first_path_.back(), members.front());
      refine(child);
      first_path_.push_back(std::move(child));
    }
    first_leaf_ = leaf_labeling(first_path_.back());
  }

  AutGroupResult run() {
    AutGroupResult out;
    const std::size_t depth = base_.size();
    out.orbit_lengths.assign(depth, 1);
    for (std::size_t level = depth; level-- > 0;) {
      const auto cell = cell_members(first_path_[level], targets_[level]);
      const std::span<const std::uint32_t> prefix(base_.data(), level);
      for (auto v : cell) {
        if (v == base_[level]) continue;
        auto uf = orbits_fixing(prefix);
        if (uf.find(v) == uf.find(base_[level])) continue;
        std::vector<std::uint32_t> path(prefix.begin(), prefix.end());
        path.push_back(v);
        Node child = individualize(first_path_[level], v);
        refine(child);
        if (auto found = search(child, level + 1, path)) generators_.push_back(std::move(*found));
      }
      auto uf = orbits_fixing(prefix);
      const auto root = uf.find(base_[level]);
      std::uint64_t len = 0;
      for (auto v : cell) len += uf.find(v) == root;
      out.orbit_lengths[level] = len;
    }
    out.order = 1;
    for (auto len : out.orbit_lengths) out.order *= len;
    for (const auto& g : generators_)
      if (!graph_.is_automorphism(g))
        throw Error(ErrorCode::InternalInconsistency, "search produced a non-automorphism");
    out.generators = std::move(generators_);
    out.base = base_;
    out.node_count = nodes_;
    return out;
  }

 private:
  void refine(Node& node) {
    ++nodes_;
    refiner_.refine(node);
  }

  static std::vector<std::uint32_t> leaf_labeling(const Node& leaf) {
    std::vector<std::uint32_t> vertex_at(leaf.color.size());
    for (std::uint32_t v = 0; v < leaf.color.size(); ++v) vertex_at[leaf.color[v]] = v;
    return vertex_at;
  }

  UnionFind orbits_fixing(std::span<const std::uint32_t> points) const {
    UnionFind uf(graph_.num_vertices());
    for (const auto& g : generators_) {
      const bool fixes = std::all_of(points.begin(), points.end(), [&](auto x) { return g[x] == x; });
      if (!fixes) continue;
      for (std::uint32_t v = 0; v < g.size(); ++v) uf.unite(v, g[v]);
    }
    return uf;
  }

  /// Looks below `node` for a leaf whose labeling, matched against the
  /// first leaf, is an automorphism.
  std::optional<PointPermutation> search(const Node& node, std::size_t depth, std::vector<std::uint32_t>& path) {
    const Node& reference = first_path_[depth];
    if (node.trace != reference.trace || node.cells != reference.cells) return std::nullopt;
    if (depth == base_.size()) {
      const auto leaf = leaf_labeling(node);
      std::vector<std::uint32_t> images(leaf.size());
      for (std::size_t r = 0; r < leaf.size(); ++r) images[first_leaf_[r]] = leaf[r];
      auto perm = PointPermutation::unchecked(std::move(images));
      if (graph_.is_automorphism(perm)) return perm;
      return std::nullopt;
    }
    const auto cell = cell_members(node, targets_[depth]);
    std::vector<std::uint32_t> failed;
    for (auto w : cell) {
      if (!failed.empty()) {
        // Generators fixing the path map failed subtrees onto each other.
        auto uf = orbits_fixing(path);
        const auto root = uf.find(w);
        if (std::any_of(failed.begin(), failed.end(), [&](auto f) { return uf.find(f) == root; })) continue;
      }
      Node child = individualize(node, w);
      refine(child);
      path.push_back(w);
      auto found = search(child, depth + 1, path);
      path.pop_back();
      if (found) return found;
      failed.push_back(w);
    }
    return std::nullopt;
  }

  const Graph& graph_;
  Refiner refiner_;
  std::vector<Node> first_path_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::uint32_t> base_;
  std::vector<std::uint32_t> first_leaf_;
  std::vector<PointPermutation> generators_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Coloring refine_coloring(const Graph& graph, const Coloring& initial) {
  const std::uint32_t n = graph.num_vertices();
  if (initial.size() != n) throw Error(ErrorCode::SizeMismatch, "coloring size != vertex count");
  std::vector<std::uint32_t> labels(initial.begin(), initial.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  Node node;
  node.color.resize(n);
  for (std::uint32_t v = 0; v < n; ++v)
    node.color[v] =
        static_cast<std::uint32_t>(std::lower_bound(labels.begin(), labels.end(), initial[v]) - labels.begin());
  node.cells = static_cast<std::uint32_t>(labels.size());
  Refiner(graph).refine(node);

  std::map<std::uint32_t, std::uint32_t> renumber;
  Coloring out(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    auto [it, inserted] = renumber.try_emplace(node.color[v], static_cast<std::uint32_t>(renumber.size()));
    out[v] = it->second;
  }
  return out;
}

AutGroupResult automorphism_group(const Graph& graph, const Coloring& initial) {
  return AutomorphismSearch(graph, initial).run();
}

}  // namespace intaut
