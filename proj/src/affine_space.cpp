#include "intaut/affine_space.hpp"

#include <limits>

namespace intaut {

std::string_view to_string(SphereClass c) noexcept {
  switch (c) {
    case SphereClass::Origin: return "Origin";
    case SphereClass::Isotropic: return "Isotropic";
    case SphereClass::SquareNonzero: return "SquareNonzero";
    case SphereClass::NonSquare: return "NonSquare";
  }
  return "Unknown";
}

Point zero_point(const FieldRef& field, unsigned n) {
  return Point{std::vector<FieldElement>(n, FieldElement::zero(field))};
}

namespace {

void check_compatible(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw Error(ErrorCode::DimensionMismatch, "points differ in dimension");
  if (x.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "points must have n >= 1");
}

std::uint64_t checked_pow(std::uint64_t base, unsigned e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > limit / base) throw Error(ErrorCode::TooLarge, "q^n overflows the configured width");
    r *= base;
  }
  return r;
}

SphereClass classify_norm(const FieldSpec& f, bool is_origin, ElemIndex norm) {
  if (is_origin) return SphereClass::Origin;
  if (norm == 0) return SphereClass::Isotropic;
  return f.is_square(norm) ? SphereClass::SquareNonzero : SphereClass::NonSquare;
}

}  // namespace

FieldElement distance(const Point& x, const Point& y) {
  check_compatible(x, y);
  FieldElement acc = FieldElement::zero(x.coords[0].field());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const FieldElement diff = x.coords[i] - y.coords[i];
    acc = acc + diff * diff;
  }
  return acc;
}

bool is_integral(const Point& x, const Point& y) { return is_square(distance(x, y)); }

SphereClass classify(const Point& v) {
  if (v.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "points must have n >= 1");
  bool origin = true;
  for (const auto& c : v.coords) origin = origin && c.is_zero();
  const FieldElement norm = distance(v, zero_point(v.coords[0].field(), static_cast<unsigned>(v.dim())));
  return classify_norm(*norm.field(), origin, norm.index());
}

std::uint64_t point_count(const FieldRef& field, unsigned n) {
  return checked_pow(field->q(), n, std::numeric_limits<PointIndex>::max());
}

PointIndex canonical_index(const Point& x) {
  if (x.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "points must have n >= 1");
  const auto& field = x.coords[0].field();
  const auto n = static_cast<unsigned>(x.dim());
  point_count(field, n);
  std::uint64_t index = 0;
  for (std::size_t j = x.dim(); j-- > 0;) {
    if (!(*x.coords[j].field() == *field))
      throw Error(ErrorCode::FieldMismatch, "coordinates from different fields");
    index = index * field->q() + x.coords[j].index();
  }
  return static_cast<PointIndex>(index);
}

Point point_of_index(const FieldRef& field, unsigned n, std::uint64_t k) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "n must be >= 1");
  if (k >= point_count(field, n)) throw Error(ErrorCode::IndexOutOfRange, "point index >= q^n");
  Point x;
  x.coords.reserve(n);
  for (unsigned j = 0; j < n; ++j) {
    x.coords.emplace_back(field, static_cast<ElemIndex>(k % field->q()));
    k /= field->q();
  }
  return x;
}

SphereCardinalities sphere_counts_formula(std::uint64_t q, unsigned n) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "n must be >= 1");
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  const auto pw = [&](unsigned e) { return static_cast<std::int64_t>(checked_pow(q, e, limit)); };
  const auto sign = [](std::uint64_t e) -> std::int64_t { return e % 2 == 0 ? 1 : -1; };

  SphereCardinalities out;
  out.epsilon = q % 4 == 1 ? 0 : 1;
  const std::uint64_t eps = static_cast<std::uint64_t>(out.epsilon);
  const std::int64_t top = pw(n) - pw(n - 1);
  std::int64_t s0 = 0, s_plus = 0, s_minus = 0;
  if (n % 2 == 1) {
    const std::int64_t a = sign(eps * (n + 3) / 2) * pw((n + 1) / 2);
    const std::int64_t b = sign(eps * (n - 1) / 2) * pw((n - 1) / 2);
    s0 = pw(n - 1) - 1;
    s_plus = (top + a - b) / 2;
    s_minus = (top - a + b) / 2;
  } else {
    const std::int64_t sg = sign(eps * n / 2);
    s0 = pw(n - 1) + sg * pw(n / 2) - sg * pw((n - 2) / 2) - 1;
    s_plus = (top - sg * pw(n / 2) + sg * pw((n - 2) / 2)) / 2;
    s_minus = s_plus;
  }
  out.s0 = static_cast<std::uint64_t>(s0);
  out.s_plus = static_cast<std::uint64_t>(s_plus);
  out.s_minus = static_cast<std::uint64_t>(s_minus);
  return out;
}

SphereCardinalities sphere_counts_formula(const FieldRef& field, unsigned n) {
  return sphere_counts_formula(field->q(), n);
}

AffineSpace::AffineSpace(FieldRef field, unsigned n, std::uint64_t max_points)
    : field_(std::move(field)), n_(n) {
  if (n_ == 0) throw Error(ErrorCode::DimensionMismatch, "n must be >= 1");
  const std::uint64_t count = point_count(field_, n_);
  if (count > max_points)
    throw Error(ErrorCode::TooLarge, "q^n = " + std::to_string(count) + " exceeds the bound " +
                                         std::to_string(max_points));
  size_ = static_cast<PointIndex>(count);
  const std::uint32_t q = field_->q();

  weight_.resize(n_);
  PointIndex w = 1;
  for (unsigned j = 0; j < n_; ++j, w *= q) weight_[j] = w;

  coords_.resize(std::size_t{size_} * n_);
  norm_.resize(size_);
  for (PointIndex k = 0; k < size_; ++k) {
    PointIndex rest = k;
    ElemIndex norm = 0;
    for (unsigned j = 0; j < n_; ++j) {
      const ElemIndex c = rest % q;
      rest /= q;
      coords_[std::size_t{k} * n_ + j] = c;
      norm = field_->add(norm, field_->square(c));
    }
    norm_[k] = norm;
  }
}

PointIndex AffineSpace::index_of(std::span<const ElemIndex> coords) const noexcept {
  PointIndex k = 0;
  for (unsigned j = 0; j < n_; ++j) k += coords[j] * weight_[j];
  return k;
}

Point AffineSpace::point(PointIndex k) const { return point_of_index(field_, n_, k); }

PointIndex AffineSpace::add(PointIndex x, PointIndex y) const noexcept {
  const auto cx = coords(x), cy = coords(y);
  PointIndex k = 0;
  for (unsigned j = 0; j < n_; ++j) k += field_->add(cx[j], cy[j]) * weight_[j];
  return k;
}

PointIndex AffineSpace::sub(PointIndex x, PointIndex y) const noexcept {
  const auto cx = coords(x), cy = coords(y);
  PointIndex k = 0;
  for (unsigned j = 0; j < n_; ++j) k += field_->sub(cx[j], cy[j]) * weight_[j];
  return k;
}

SphereClass AffineSpace::classify(PointIndex k) const noexcept {
  return classify_norm(*field_, k == 0, norm_[k]);
}

SphereCardinalities AffineSpace::sphere_counts() const {
  SphereCardinalities out;
  out.epsilon = q() % 4 == 1 ? 0 : 1;
  for (PointIndex k = 0; k < size_; ++k) {
    switch (classify(k)) {
      case SphereClass::Origin: break;
      case SphereClass::Isotropic: ++out.s0; break;
      case SphereClass::SquareNonzero: ++out.s_plus; break;
      case SphereClass::NonSquare: ++out.s_minus; break;
    }
  }
  return out;
}

std::vector<PointIndex> AffineSpace::cone(PointIndex vertex) const {
  std::vector<PointIndex> out;
  for (PointIndex x = 0; x < size_; ++x)
    if (distance(x, vertex) == 0) out.push_back(x);
  return out;
}

SphereCardinalities sphere_counts_enumerated(const FieldRef& field, unsigned n,
                                             std::uint64_t max_points) {
  return AffineSpace(field, n, max_points).sphere_counts();
}

std::vector<Point> cone(const Point& vertex, std::uint64_t max_points) {
  if (vertex.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "points must have n >= 1");
  const AffineSpace space(vertex.coords[0].field(), static_cast<unsigned>(vertex.dim()), max_points);
  std::vector<Point> out;
  for (PointIndex k : space.cone(canonical_index(vertex))) out.push_back(space.point(k));
  return out;
}

}  // namespace intaut
