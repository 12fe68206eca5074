#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "intaut/affine_space.hpp"
#include "intaut/permutation.hpp"

namespace intaut {

/// n x n matrix over F_q with A A^T = I, stored row-major as element indices.
class OrthogonalMatrix {
 public:
  /// Throws DimensionMismatch on a wrong entry count and NotOrthogonal when
  /// A A^T != I.
  OrthogonalMatrix(FieldRef field, unsigned n, std::vector<ElemIndex> entries);

  static OrthogonalMatrix identity(FieldRef field, unsigned n);

  const FieldRef& field() const noexcept { return field_; }
  unsigned n() const noexcept { return n_; }
  ElemIndex at(unsigned row, unsigned col) const noexcept { return entries_[row * n_ + col]; }
  FieldElement entry(unsigned row, unsigned col) const { return {field_, at(row, col)}; }
  const std::vector<ElemIndex>& entries() const noexcept { return entries_; }

  OrthogonalMatrix negated() const;
  bool is_identity() const noexcept;

  friend bool operator==(const OrthogonalMatrix& a, const OrthogonalMatrix& b) noexcept {
    return a.n_ == b.n_ && a.entries_ == b.entries_ && *a.field_ == *b.field_;
  }

 private:
  struct Unchecked {};
  OrthogonalMatrix(Unchecked, FieldRef field, unsigned n, std::vector<ElemIndex> entries)
      : field_(std::move(field)), n_(n), entries_(std::move(entries)) {}

  FieldRef field_;
  unsigned n_;
  std::vector<ElemIndex> entries_;
};

/// M M^T == c I for some scalar c; returns c, or nullopt otherwise.
std::optional<ElemIndex> gram_scalar(const FieldSpec& f, unsigned n, const std::vector<ElemIndex>& m);

/// x -> a x^(sigma^i) A + b, with points as row vectors.
struct SemiaffineMap {
  FieldElement a;
  unsigned i = 0;
  OrthogonalMatrix A;
  Point b;

  static SemiaffineMap identity(const FieldRef& field, unsigned n);
  static SemiaffineMap translation(const Point& b);

  /// (a, A) and (-a, -A) act identically; keeps whichever has the smaller
  /// index for a. Throws DivisionByZero when a = 0.
  SemiaffineMap normalized() const;
  bool is_normalized() const noexcept;

  friend bool operator==(const SemiaffineMap&, const SemiaffineMap&) = default;
};

Point apply(const SemiaffineMap& m, const Point& x);
PointPermutation to_permutation(const SemiaffineMap& m, const AffineSpace& space);

/// Bound on the number of matrices enumerate_orthogonal will produce.
inline constexpr std::uint64_t kDefaultMaxMatrices = 2'000'000;

/// All orthogonal n x n matrices, by choosing unit rows one at a time under
/// the orthogonality constraints. Lexicographic in the row point indices.
std::vector<OrthogonalMatrix> enumerate_orthogonal(const AffineSpace& space,
                                                   std::uint64_t max_matrices = kDefaultMaxMatrices);

/// Reflections x -> x - 2 (x.v / v.v) v, one per anisotropic line <v>.
/// They generate O(n, q) for odd q, so they serve as a compact generating
/// set where the full enumeration is too large.
std::vector<OrthogonalMatrix> reflections(const AffineSpace& space);

/// Bound on (group order) x q^n for semiaffine_group.
inline constexpr std::uint64_t kDefaultMaxGroupEntries = 200'000'000;

/// Distinct point permutations induced by all (a, i, A, b), sorted.
std::vector<PointPermutation> semiaffine_group(const AffineSpace& space,
                                               std::uint64_t max_entries = kDefaultMaxGroupEntries);

/// q^n * h * (q - 1) * |O(n, q)| / 2, from a given orthogonal group order.
std::uint64_t semiaffine_order_formula(const AffineSpace& space, std::uint64_t orthogonal_count);

/// Decomposes perm as a semiaffine map, or nullopt when it is not one.
/// Throws SizeMismatch when perm has the wrong degree.
std::optional<SemiaffineMap> recognize_semiaffine(const PointPermutation& perm, const AffineSpace& space);

/// d(x, y) square <=> d(x^g, y^g) square, over all unordered pairs.
bool preserves_integral(const PointPermutation& perm, const AffineSpace& space);
/// d(x, y) = 0 <=> d(x^g, y^g) = 0, over all pairs.
bool satisfies_zero_iff(const PointPermutation& perm, const AffineSpace& space);
/// C(a)^g = C(a^g) for every vertex a, comparing cone sets. Cross-checks the
/// verdict against satisfies_zero_iff and throws InternalInconsistency if
/// they disagree.
bool preserves_cones(const PointPermutation& perm, const AffineSpace& space);

}  // namespace intaut
