#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "intaut/finite_field.hpp"

namespace intaut {

using PointIndex = std::uint32_t;

/// Default bound on q^n for anything that enumerates the whole point set.
inline constexpr std::uint64_t kDefaultMaxPoints = 100000;

/// A point of AG(n, q) as a row vector.
struct Point {
  std::vector<FieldElement> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  friend bool operator==(const Point&, const Point&) = default;
};

Point zero_point(const FieldRef& field, unsigned n);

enum class SphereClass { Origin, Isotropic, SquareNonzero, NonSquare };

std::string_view to_string(SphereClass c) noexcept;

struct SphereCardinalities {
  std::uint64_t s0 = 0;
  std::uint64_t s_plus = 0;
  std::uint64_t s_minus = 0;
  int epsilon = 0;  // 0 iff q = 1 (mod 4)

  friend bool operator==(const SphereCardinalities&, const SphereCardinalities&) = default;
};

/// d(x, y) = sum of (x_i - y_i)^2.
FieldElement distance(const Point& x, const Point& y);
/// d(x, y) is a square, zero included.
bool is_integral(const Point& x, const Point& y);
SphereClass classify(const Point& v);

/// q^n, or TooLarge when it does not fit the 32-bit point index.
std::uint64_t point_count(const FieldRef& field, unsigned n);

/// Mixed radix, coordinate 0 least significant, digits are canonical
/// element indices.
PointIndex canonical_index(const Point& x);
Point point_of_index(const FieldRef& field, unsigned n, std::uint64_t k);

/// The closed forms for |S_0|, |S_+|, |S_-| split by the parity of n.
/// Exact integer arithmetic; signs are taken from exponent parity.
SphereCardinalities sphere_counts_formula(std::uint64_t q, unsigned n);
SphereCardinalities sphere_counts_formula(const FieldRef& field, unsigned n);

/// The point set F_q^n with precomputed coordinate and norm tables, for
/// code that walks every point. Construction enforces the enumeration bound.
class AffineSpace {
 public:
  AffineSpace(FieldRef field, unsigned n, std::uint64_t max_points = kDefaultMaxPoints);

  const FieldRef& field() const noexcept { return field_; }
  const FieldSpec& f() const noexcept { return *field_; }
  unsigned n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return field_->q(); }
  PointIndex size() const noexcept { return size_; }

  std::span<const ElemIndex> coords(PointIndex k) const noexcept {
    return {coords_.data() + std::size_t{k} * n_, n_};
  }
  PointIndex index_of(std::span<const ElemIndex> coords) const noexcept;
  Point point(PointIndex k) const;

  PointIndex add(PointIndex x, PointIndex y) const noexcept;
  PointIndex sub(PointIndex x, PointIndex y) const noexcept;
  PointIndex unit(unsigned j) const noexcept { return weight_[j]; }
  /// Sum of squared coordinates.
  ElemIndex norm(PointIndex k) const noexcept { return norm_[k]; }
  ElemIndex distance(PointIndex x, PointIndex y) const noexcept { return norm_[sub(x, y)]; }
  bool is_integral(PointIndex x, PointIndex y) const noexcept {
    return field_->is_square(distance(x, y));
  }
  SphereClass classify(PointIndex k) const noexcept;

  SphereCardinalities sphere_counts() const;
  /// C(a) = {x : d(x, a) = 0}, ascending.
  std::vector<PointIndex> cone(PointIndex vertex) const;

 private:
  FieldRef field_;
  unsigned n_;
  PointIndex size_;
  std::vector<PointIndex> weight_;  // q^j
  std::vector<ElemIndex> coords_;
  std::vector<ElemIndex> norm_;
};

/// Brute-force counts from classifying all q^n points.
SphereCardinalities sphere_counts_enumerated(const FieldRef& field, unsigned n,
                                             std::uint64_t max_points = kDefaultMaxPoints);
std::vector<Point> cone(const Point& vertex, std::uint64_t max_points = kDefaultMaxPoints);

}  // namespace intaut
