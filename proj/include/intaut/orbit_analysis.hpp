#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "intaut/affine_space.hpp"
#include "intaut/permutation.hpp"

namespace intaut {

/// Disjoint orbits covering [0, size). Each orbit is ascending and orbits
/// are ordered by least element.
struct OrbitDecomposition {
  std::vector<std::vector<std::uint32_t>> orbits;

  std::size_t rank() const noexcept { return orbits.size(); }
  /// Sorted orbit sizes.
  std::vector<std::size_t> sizes() const;
  /// Sizes of the orbits other than the one containing `point`, sorted.
  std::vector<std::size_t> subdegrees(std::uint32_t point) const;

  friend bool operator==(const OrbitDecomposition&, const OrbitDecomposition&) = default;
};

/// Orbits of the group generated by `generators`, via union-find.
OrbitDecomposition orbits_under(std::span<const PointPermutation> generators, std::uint32_t size);

/// {0} and the nonempty classes among S_0, S_+, S_-, in the same ordering
/// as an OrbitDecomposition.
OrbitDecomposition classify_partition(const AffineSpace& space);

enum class MGenerators {
  /// Every orthogonal matrix from enumerate_orthogonal.
  Enumerated,
  /// One reflection per anisotropic line.
  Reflections,
  /// Enumerated when |O(n, q)| is small, reflections otherwise.
  Auto,
};

/// Orbits of M = {x -> a x A : a != 0, A A^T = I}. Generators are the
/// scaling by a primitive element together with the orthogonal matrices
/// selected by `mode`.
OrbitDecomposition m_orbits(const AffineSpace& space, MGenerators mode = MGenerators::Auto);

/// Orbits of the stabilizer of `fixed` inside the listed group. With
/// verify_closure set, throws NotAGroup if `group` is not closed.
OrbitDecomposition stabilizer_orbits(std::span<const PointPermutation> group, std::uint32_t fixed,
                                     bool verify_closure = false);

struct Connectivity {
  bool connected = false;
  /// The generating class was empty; reported instead of a vacuous answer.
  bool degenerate = false;
  std::uint32_t reached = 0;
};

/// Breadth-first search from 0 along x -> x + y, y in the chosen class.
/// Throws DimensionMismatch for SphereClass::Origin.
Connectivity orbital_connected(const AffineSpace& space, SphereClass cls);

}  // namespace intaut
