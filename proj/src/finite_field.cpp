#include "intaut/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace intaut {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Poly& f, const Poly& g, Residue p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      r[i + j] = static_cast<Residue>((r[i + j] + std::uint64_t{f[i]} * g[j]) % p);
  }
  trim(r);
  return r;
}

Residue inv_mod(Residue a, Residue p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<Residue>(result);
}

// Returns (quotient, remainder) of f / m.
std::pair<Poly, Poly> divmod(Poly f, const Poly& m, Residue p) {
  trim(f);
  if (m.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (f.size() < m.size()) return {{}, f};
  const Residue lead_inv = inv_mod(m.back(), p);
  Poly quot(f.size() - m.size() + 1, 0);
  for (std::size_t k = f.size(); k-- >= m.size();) {
    const Residue c = static_cast<Residue>(std::uint64_t{f[k]} * lead_inv % p);
    if (c == 0) continue;
    const std::size_t shift = k - (m.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < m.size(); ++j)
      f[shift + j] = static_cast<Residue>((f[shift + j] + std::uint64_t{p - c} * m[j]) % p);
  }
  trim(f);
  trim(quot);
  return {quot, f};
}

Poly mod(Poly f, const Poly& m, Residue p) { return divmod(std::move(f), m, p).second; }

Poly sub(const Poly& f, const Poly& g, Residue p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Residue a = i < f.size() ? f[i] : 0;
    const Residue b = i < g.size() ? g[i] : 0;
    r[i] = (a + p - b) % p;
  }
  trim(r);
  return r;
}

Poly gcd(Poly f, Poly g, Residue p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const Residue lead_inv = inv_mod(f.back(), p);
    for (auto& c : f) c = static_cast<Residue>(std::uint64_t{c} * lead_inv % p);
  }
  return f;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, Residue p) {
  Poly result{1};
  result = mod(result, m, p);
  Poly b = mod(base, m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mod(mul(result, b, p), m, p);
    b = mod(mul(b, b, p), m, p);
  }
  return result;
}

bool is_irreducible(const Poly& f_in, Residue p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  const Poly x{0, 1};
  Poly x_pk = x;
  for (std::size_t k = 1; k <= d / 2; ++k) {
    x_pk = powmod(x_pk, p, f, p);
    const Poly g = gcd(f, sub(x_pk, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly

FieldSpec::FieldSpec(Residue p, unsigned h, std::vector<Residue> modulus)
    : p_(p), h_(h), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < h_; ++i) q *= p_;
  q_ = static_cast<std::uint32_t>(q);

  neg_.resize(q_);
  add_.resize(std::size_t{q_} * q_);
  for (ElemIndex x = 0; x < q_; ++x) {
    const auto cx = coeffs(x);
    std::vector<Residue> c(h_);
    for (unsigned j = 0; j < h_; ++j) c[j] = (p_ - cx[j]) % p_;
    neg_[x] = from_coeffs(c);
    for (ElemIndex y = 0; y < q_; ++y) {
      const auto cy = coeffs(y);
      for (unsigned j = 0; j < h_; ++j) c[j] = (cx[j] + cy[j]) % p_;
      add_[std::size_t{x} * q_ + y] = from_coeffs(c);
    }
  }

  // Primitive element: least index whose multiplicative order is q - 1.
  ElemIndex generator = 0;
  for (ElemIndex g = 1; g < q_ && generator == 0; ++g) {
    ElemIndex acc = g;
    std::uint32_t order = 1;
    while (acc != 1) {
      acc = mul_poly(acc, g);
      ++order;
    }
    if (order == q_ - 1) generator = g;
  }
  if (generator == 0) throw Error(ErrorCode::ReducibleModulus, "no primitive element found");

  exp_.assign(2 * std::size_t{q_ - 1}, 0);
  log_.assign(q_, 0);
  ElemIndex acc = 1;
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = acc;
    exp_[k + q_ - 1] = acc;
    log_[acc] = k;
    acc = mul_poly(acc, generator);
  }

  square_flag_.assign(q_, 0);
  square_flag_[0] = 1;
  for (ElemIndex x = 1; x < q_; ++x) square_flag_[x] = pow(x, (q_ - 1) / 2) == 1 ? 1 : 0;
}

std::vector<Residue> FieldSpec::coeffs(ElemIndex x) const {
  std::vector<Residue> c(h_);
  for (unsigned j = 0; j < h_; ++j) {
    c[j] = x % p_;
    x /= p_;
  }
  return c;
}

ElemIndex FieldSpec::from_coeffs(std::span<const Residue> c) const {
  if (c.size() != h_) throw Error(ErrorCode::DegreeMismatch, "coefficient vector length != h");
  ElemIndex x = 0;
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j] >= p_) throw Error(ErrorCode::FieldMismatch, "coefficient out of range");
    x = x * p_ + c[j];
  }
  return x;
}

ElemIndex FieldSpec::inv(ElemIndex x) const {
  if (x == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

ElemIndex FieldSpec::pow(ElemIndex x, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (x == 0) return 0;
  return exp_[(std::uint64_t{log_[x]} * (e % (q_ - 1))) % (q_ - 1)];
}

ElemIndex FieldSpec::frobenius(ElemIndex x, unsigned i) const {
  if (i >= h_) throw Error(ErrorCode::ExponentOutOfRange, "frobenius exponent must be < h");
  for (unsigned k = 0; k < i; ++k) x = pow(x, p_);
  return x;
}

ElemIndex FieldSpec::mul_poly(ElemIndex x, ElemIndex y) const {
  poly::Poly fx = coeffs(x), fy = coeffs(y);
  poly::trim(fx);
  poly::trim(fy);
  poly::Poly r = poly::mod(poly::mul(fx, fy, p_), modulus_, p_);
  r.resize(h_, 0);
  return from_coeffs(r);
}

ElemIndex FieldSpec::inv_poly(ElemIndex x) const {
  if (x == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // Invariant: s0 * x = r0 and s1 * x = r1 (mod modulus).
  poly::Poly r0 = modulus_, r1 = coeffs(x);
  poly::trim(r1);
  poly::Poly s0{}, s1{1};
  while (r1.size() > 1) {
    auto [quot, rem] = poly::divmod(r0, r1, p_);
    poly::Poly s2 = poly::sub(s0, poly::mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Residue c_inv = poly::inv_mod(r1.at(0), p_);
  poly::Poly result = poly::mod(poly::mul(s1, {c_inv}, p_), modulus_, p_);
  result.resize(h_, 0);
  return from_coeffs(result);
}

std::string FieldSpec::describe_modulus() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = modulus_.size(); k-- > 0;) {
    const Residue c = modulus_[k];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  if (first) out << "0";
  return out.str();
}

FieldRef make_field(std::uint64_t p, unsigned h, std::optional<std::vector<Residue>> modulus) {
  if (p == 2) throw Error(ErrorCode::EvenPrime, "p = 2 is not an odd prime");
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (h == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorCode::TooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  const auto pr = static_cast<Residue>(p);

  std::vector<Residue> chosen;
  if (modulus) {
    chosen = *modulus;
    if (chosen.size() != h + 1)
      throw Error(ErrorCode::DegreeMismatch, "modulus must have h + 1 coefficients");
    for (auto& c : chosen) c %= pr;
    if (chosen.back() != 1) throw Error(ErrorCode::DegreeMismatch, "modulus must be monic");
    if (!poly::is_irreducible(chosen, pr))
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  } else {
    std::vector<Residue> cand(h + 1, 0);
    cand[h] = 1;
    for (std::uint64_t value = 0; value < q; ++value) {
      std::uint64_t v = value;
      for (unsigned j = 0; j < h; ++j) {
        cand[j] = static_cast<Residue>(v % p);
        v /= p;
      }
      if (poly::is_irreducible(cand, pr)) {
        chosen = cand;
        break;
      }
    }
  }
  return std::make_shared<const FieldSpec>(pr, h, std::move(chosen));
}

FieldElement::FieldElement(FieldRef field, ElemIndex index) : field_(std::move(field)), index_(index) {
  if (index_ >= field_->q()) throw Error(ErrorCode::IndexOutOfRange, "element index >= q");
}

FieldElement FieldElement::from_coeffs(FieldRef field, std::span<const Residue> coeffs) {
  const ElemIndex idx = field->from_coeffs(coeffs);
  return {std::move(field), idx};
}

namespace {

const FieldRef& common_field(const FieldElement& x, const FieldElement& y) {
  if (x.field() != y.field() && !(*x.field() == *y.field()))
    throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
  return x.field();
}

}  // namespace

FieldElement add(const FieldElement& x, const FieldElement& y) {
  const auto& f = common_field(x, y);
  return {f, f->add(x.index(), y.index())};
}

FieldElement sub(const FieldElement& x, const FieldElement& y) {
  const auto& f = common_field(x, y);
  return {f, f->sub(x.index(), y.index())};
}

FieldElement mul(const FieldElement& x, const FieldElement& y) {
  const auto& f = common_field(x, y);
  return {f, f->mul(x.index(), y.index())};
}

FieldElement neg(const FieldElement& x) { return {x.field(), x.field()->neg(x.index())}; }

FieldElement inv(const FieldElement& x) { return {x.field(), x.field()->inv(x.index())}; }

FieldElement frobenius(const FieldElement& x, unsigned i) {
  return {x.field(), x.field()->frobenius(x.index(), i)};
}

bool is_square(const FieldElement& x) { return x.field()->is_square(x.index()); }

std::vector<FieldElement> enumerate_field(const FieldRef& field) {
  std::vector<FieldElement> out;
  out.reserve(field->q());
  for (ElemIndex k = 0; k < field->q(); ++k) out.emplace_back(field, k);
  return out;
}

}  // namespace intaut
