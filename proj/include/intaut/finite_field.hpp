#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "intaut/error.hpp"

namespace intaut {

using Residue = std::uint32_t;
/// Canonical index of a field element: its coefficient vector read as a
/// base-p integer, constant term least significant.
using ElemIndex = std::uint32_t;

/// Largest supported field order; arithmetic is fully tabulated.
inline constexpr std::uint64_t kMaxFieldOrder = 1024;

/// F_{p^h} realized as F_p[t] / (modulus). Immutable; share through FieldRef.
class FieldSpec {
 public:
  FieldSpec(Residue p, unsigned h, std::vector<Residue> modulus);

  Residue p() const noexcept { return p_; }
  unsigned h() const noexcept { return h_; }
  std::uint32_t q() const noexcept { return q_; }
  /// h + 1 coefficients, constant term first, leading coefficient 1.
  const std::vector<Residue>& modulus() const noexcept { return modulus_; }

  std::vector<Residue> coeffs(ElemIndex x) const;
  ElemIndex from_coeffs(std::span<const Residue> coeffs) const;

  // Table-driven arithmetic on canonical indices. These are the hot paths
  // used by every enumeration; the polynomial routes below are the reference.
  ElemIndex add(ElemIndex x, ElemIndex y) const noexcept { return add_[x * q_ + y]; }
  ElemIndex sub(ElemIndex x, ElemIndex y) const noexcept { return add_[x * q_ + neg_[y]]; }
  ElemIndex neg(ElemIndex x) const noexcept { return neg_[x]; }
  ElemIndex mul(ElemIndex x, ElemIndex y) const noexcept {
    if (x == 0 || y == 0) return 0;
    return exp_[log_[x] + log_[y]];
  }
  ElemIndex square(ElemIndex x) const noexcept { return mul(x, x); }
  ElemIndex inv(ElemIndex x) const;
  ElemIndex pow(ElemIndex x, std::uint64_t e) const noexcept;
  /// x^(p^i) by i successive p-th powers.
  ElemIndex frobenius(ElemIndex x, unsigned i) const;
  /// True for zero and for x with x^((q-1)/2) = 1.
  bool is_square(ElemIndex x) const noexcept { return square_flag_[x] != 0; }
  ElemIndex primitive_element() const noexcept { return exp_[1]; }

  /// Schoolbook polynomial product reduced by the modulus.
  ElemIndex mul_poly(ElemIndex x, ElemIndex y) const;
  /// Inverse by the extended Euclidean algorithm over F_p[t].
  ElemIndex inv_poly(ElemIndex x) const;

  bool operator==(const FieldSpec& other) const noexcept {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

  std::string describe_modulus() const;

 private:
  Residue p_;
  unsigned h_;
  std::uint32_t q_;
  std::vector<Residue> modulus_;
  std::vector<ElemIndex> add_;
  std::vector<ElemIndex> neg_;
  std::vector<ElemIndex> exp_;  // length 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> square_flag_;
};

using FieldRef = std::shared_ptr<const FieldSpec>;

/// Builds F_{p^h}. Without a modulus, picks the least monic irreducible of
/// degree h, ordering candidates by (c_0, ..., c_{h-1}) read in base p with
/// c_0 least significant.
FieldRef make_field(std::uint64_t p, unsigned h,
                    std::optional<std::vector<Residue>> modulus = std::nullopt);

/// A scalar of a specific field.
class FieldElement {
 public:
  FieldElement(FieldRef field, ElemIndex index);

  static FieldElement zero(FieldRef field) { return {std::move(field), 0}; }
  static FieldElement one(FieldRef field) { return {std::move(field), 1}; }
  static FieldElement from_coeffs(FieldRef field, std::span<const Residue> coeffs);

  const FieldRef& field() const noexcept { return field_; }
  ElemIndex index() const noexcept { return index_; }
  std::vector<Residue> coeffs() const { return field_->coeffs(index_); }
  bool is_zero() const noexcept { return index_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.index_ == b.index_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
  }

 private:
  FieldRef field_;
  ElemIndex index_;
};

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldElement& x);
FieldElement inv(const FieldElement& x);
FieldElement frobenius(const FieldElement& x, unsigned i);
bool is_square(const FieldElement& x);

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) { return add(x, y); }
inline FieldElement operator-(const FieldElement& x, const FieldElement& y) { return sub(x, y); }
inline FieldElement operator*(const FieldElement& x, const FieldElement& y) { return mul(x, y); }
inline FieldElement operator-(const FieldElement& x) { return neg(x); }

/// All q elements in canonical index order (zero first, then one).
std::vector<FieldElement> enumerate_field(const FieldRef& field);

bool is_prime(std::uint64_t n) noexcept;

namespace poly {

/// Dense polynomials over F_p, constant term first, no trailing zeros
/// (the zero polynomial is empty).
using Poly = std::vector<Residue>;

void trim(Poly& f);
Poly mul(const Poly& f, const Poly& g, Residue p);
Residue inv_mod(Residue a, Residue p);
/// Quotient and remainder of f by m.
std::pair<Poly, Poly> divmod(Poly f, const Poly& m, Residue p);
Poly mod(Poly f, const Poly& m, Residue p);
Poly sub(const Poly& f, const Poly& g, Residue p);
Poly gcd(Poly f, Poly g, Residue p);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, Residue p);
/// Ben-Or test: f of degree d is irreducible iff gcd(x^(p^k) - x, f) = 1
/// for every k <= d/2.
bool is_irreducible(const Poly& f, Residue p);

}  // namespace poly

}  // namespace intaut
