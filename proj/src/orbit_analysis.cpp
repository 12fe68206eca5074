#include "intaut/orbit_analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "intaut/transform_group.hpp"

namespace intaut {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::uint32_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

OrbitDecomposition from_labels(std::span<const std::uint32_t> label, std::uint32_t size) {
  std::map<std::uint32_t, std::size_t> slot;
  OrbitDecomposition out;
  for (std::uint32_t k = 0; k < size; ++k) {
    auto [it, inserted] = slot.try_emplace(label[k], out.orbits.size());
    if (inserted) out.orbits.emplace_back();
    out.orbits[it->second].push_back(k);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> OrbitDecomposition::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> OrbitDecomposition::subdegrees(std::uint32_t point) const {
  std::vector<std::size_t> out;
  for (const auto& o : orbits)
    if (!std::binary_search(o.begin(), o.end(), point)) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

OrbitDecomposition orbits_under(std::span<const PointPermutation> generators, std::uint32_t size) {
  UnionFind uf(size);
  for (const auto& g : generators) {
    if (g.size() != size) throw Error(ErrorCode::SizeMismatch, "generator degree differs from size");
    for (std::uint32_t k = 0; k < size; ++k) uf.unite(k, g[k]);
  }
  std::vector<std::uint32_t> label(size);
  for (std::uint32_t k = 0; k < size; ++k) label[k] = uf.find(k);
  return from_labels(label, size);
}

OrbitDecomposition classify_partition(const AffineSpace& space) {
  std::vector<std::uint32_t> label(space.size());
  for (PointIndex k = 0; k < space.size(); ++k) label[k] = static_cast<std::uint32_t>(space.classify(k));
  return from_labels(label, space.size());
}

OrbitDecomposition m_orbits(const AffineSpace& space, MGenerators mode) {
  const auto& f = space.f();
  if (mode == MGenerators::Auto) {
    // |O(n, q)| is on the order of q^(n(n-1)/2); enumerate only when small.
    double estimate = 2.0;
    for (unsigned k = 0; k < space.n() * (space.n() - 1) / 2; ++k) estimate *= space.q();
    mode = estimate <= 20000.0 ? MGenerators::Enumerated : MGenerators::Reflections;
  }
  const auto matrices = mode == MGenerators::Enumerated ? enumerate_orthogonal(space) : reflections(space);

  std::vector<PointPermutation> generators;
  generators.reserve(matrices.size() + 1);
  const Point origin = zero_point(space.field(), space.n());
  generators.push_back(to_permutation(
      SemiaffineMap{FieldElement(space.field(), f.primitive_element()), 0,
                    OrthogonalMatrix::identity(space.field(), space.n()), origin},
      space));
  for (const auto& A : matrices)
    generators.push_back(to_permutation(SemiaffineMap{FieldElement::one(space.field()), 0, A, origin}, space));
  return orbits_under(generators, space.size());
}

OrbitDecomposition stabilizer_orbits(std::span<const PointPermutation> group, std::uint32_t fixed,
                                     bool verify_closure) {
  if (group.empty()) throw Error(ErrorCode::NotAGroup, "empty element list");
  const std::uint32_t size = group.front().size();
  if (fixed >= size) throw Error(ErrorCode::IndexOutOfRange, "fixed point out of range");
  if (verify_closure && !is_closed_group(group))
    throw Error(ErrorCode::NotAGroup, "element list is not closed under composition and inverse");
  std::vector<PointPermutation> stabilizer;
  for (const auto& g : group)
    if (g[fixed] == fixed) stabilizer.push_back(g);
  return orbits_under(stabilizer, size);
}

Connectivity orbital_connected(const AffineSpace& space, SphereClass cls) {
  if (cls == SphereClass::Origin)
    throw Error(ErrorCode::DimensionMismatch, "orbital graphs need a nondiagonal class");
  std::vector<PointIndex> steps;
  for (PointIndex k = 0; k < space.size(); ++k)
    if (space.classify(k) == cls) steps.push_back(k);
  Connectivity out;
  if (steps.empty()) {
    out.degenerate = true;
    return out;
  }
  // The step set is closed under negation, so reaching everything from 0
  // along directed steps is the same as undirected connectivity.
  for (PointIndex y : steps)
    if (space.classify(space.sub(0, y)) != cls)
      throw Error(ErrorCode::InternalInconsistency, "step set not symmetric");

  std::vector<std::uint8_t> seen(space.size(), 0);
  std::deque<PointIndex> frontier{0};
  seen[0] = 1;
  out.reached = 1;
  while (!frontier.empty()) {
    const PointIndex x = frontier.front();
    frontier.pop_front();
    for (PointIndex y : steps) {
      const PointIndex z = space.add(x, y);
      if (!seen[z]) {
        seen[z] = 1;
        ++out.reached;
        frontier.push_back(z);
      }
    }
  }
  out.connected = out.reached == space.size();
  return out;
}

}  // namespace intaut
