#include "intaut/transform_group.hpp"

#include <algorithm>
#include <unordered_set>

namespace intaut {

namespace {

void check_space(const AffineSpace& space, std::uint32_t size) {
  if (size != space.size())
    throw Error(ErrorCode::SizeMismatch, "permutation degree " + std::to_string(size) + " != q^n = " +
                                             std::to_string(space.size()));
}

void check_bijection(const PointPermutation& perm) {
  std::vector<std::uint8_t> seen(perm.size(), 0);
  for (auto v : perm.images()) {
    if (v >= perm.size() || seen[v]) throw Error(ErrorCode::NotABijection, "permutation is not a bijection");
    seen[v] = 1;
  }
}

// x^(sigma^i) M for a row vector x given by element indices.
void semilinear_image(const FieldSpec& f, unsigned n, std::span<const ElemIndex> x, unsigned i,
                      std::span<const ElemIndex> m, std::span<ElemIndex> out) {
  std::fill(out.begin(), out.end(), 0);
  for (unsigned k = 0; k < n; ++k) {
    const ElemIndex xk = i == 0 ? x[k] : f.frobenius(x[k], i);
    if (xk == 0) continue;
    for (unsigned j = 0; j < n; ++j) out[j] = f.add(out[j], f.mul(xk, m[k * n + j]));
  }
}

// Images of every point under x -> a x^(sigma^i) M (no translation).
std::vector<PointIndex> linear_images(const AffineSpace& space, ElemIndex a, unsigned i,
                                      const std::vector<ElemIndex>& m) {
  const auto& f = space.f();
  const unsigned n = space.n();
  std::vector<PointIndex> images(space.size());
  std::vector<ElemIndex> row(n);
  for (PointIndex k = 0; k < space.size(); ++k) {
    semilinear_image(f, n, space.coords(k), i, m, row);
    for (auto& c : row) c = f.mul(a, c);
    images[k] = space.index_of(row);
  }
  return images;
}

ElemIndex dot(const FieldSpec& f, std::span<const ElemIndex> x, std::span<const ElemIndex> y) {
  ElemIndex acc = 0;
  for (std::size_t j = 0; j < x.size(); ++j) acc = f.add(acc, f.mul(x[j], y[j]));
  return acc;
}

}  // namespace

std::optional<ElemIndex> gram_scalar(const FieldSpec& f, unsigned n, const std::vector<ElemIndex>& m) {
  std::optional<ElemIndex> c;
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned s = 0; s < n; ++s) {
      ElemIndex acc = 0;
      for (unsigned k = 0; k < n; ++k) acc = f.add(acc, f.mul(m[r * n + k], m[s * n + k]));
      if (r != s && acc != 0) return std::nullopt;
      if (r == s) {
        if (c && *c != acc) return std::nullopt;
        c = acc;
      }
    }
  }
  return c;
}

OrthogonalMatrix::OrthogonalMatrix(FieldRef field, unsigned n, std::vector<ElemIndex> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (n_ == 0 || entries_.size() != std::size_t{n_} * n_)
    throw Error(ErrorCode::DimensionMismatch, "orthogonal matrix needs n*n entries");
  for (auto e : entries_)
    if (e >= field_->q()) throw Error(ErrorCode::FieldMismatch, "matrix entry out of range");
  if (gram_scalar(*field_, n_, entries_) != std::optional<ElemIndex>{1})
    throw Error(ErrorCode::NotOrthogonal, "A A^T != I");
}

OrthogonalMatrix OrthogonalMatrix::identity(FieldRef field, unsigned n) {
  std::vector<ElemIndex> e(std::size_t{n} * n, 0);
  for (unsigned r = 0; r < n; ++r) e[r * n + r] = 1;
  return {Unchecked{}, std::move(field), n, std::move(e)};
}

OrthogonalMatrix OrthogonalMatrix::negated() const {
  std::vector<ElemIndex> e = entries_;
  for (auto& x : e) x = field_->neg(x);
  return {Unchecked{}, field_, n_, std::move(e)};
}

bool OrthogonalMatrix::is_identity() const noexcept {
  for (unsigned r = 0; r < n_; ++r)
    for (unsigned c = 0; c < n_; ++c)
      if (at(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

SemiaffineMap SemiaffineMap::identity(const FieldRef& field, unsigned n) {
  return {FieldElement::one(field), 0, OrthogonalMatrix::identity(field, n), zero_point(field, n)};
}

SemiaffineMap SemiaffineMap::translation(const Point& b) {
  const auto& field = b.coords.at(0).field();
  const auto n = static_cast<unsigned>(b.dim());
  return {FieldElement::one(field), 0, OrthogonalMatrix::identity(field, n), b};
}

SemiaffineMap SemiaffineMap::normalized() const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "semiaffine scalar must be nonzero");
  if (is_normalized()) return *this;
  return {-a, i, A.negated(), b};
}

bool SemiaffineMap::is_normalized() const noexcept {
  return a.index() <= a.field()->neg(a.index());
}

Point apply(const SemiaffineMap& m, const Point& x) {
  const unsigned n = m.A.n();
  if (x.dim() != n || m.b.dim() != n) throw Error(ErrorCode::DimensionMismatch, "map and point differ in n");
  const auto& field = m.a.field();
  Point y = m.b;
  for (unsigned j = 0; j < n; ++j) {
    FieldElement acc = FieldElement::zero(field);
    for (unsigned k = 0; k < n; ++k) acc = acc + frobenius(x.coords[k], m.i) * m.A.entry(k, j);
    y.coords[j] = m.a * acc + m.b.coords[j];
  }
  return y;
}

PointPermutation to_permutation(const SemiaffineMap& m, const AffineSpace& space) {
  if (m.A.n() != space.n() || m.b.dim() != space.n())
    throw Error(ErrorCode::DimensionMismatch, "map and space differ in n");
  auto images = linear_images(space, m.a.index(), m.i, m.A.entries());
  const PointIndex b = canonical_index(m.b);
  for (auto& v : images) v = space.add(v, b);
  return PointPermutation::unchecked(std::move(images));
}

std::vector<OrthogonalMatrix> enumerate_orthogonal(const AffineSpace& space, std::uint64_t max_matrices) {
  const auto& f = space.f();
  const unsigned n = space.n();
  std::vector<PointIndex> units;
  for (PointIndex k = 0; k < space.size(); ++k)
    if (space.norm(k) == 1) units.push_back(k);

  const std::size_t u = units.size();
  std::vector<std::uint8_t> orthogonal(u * u, 0);
  for (std::size_t s = 0; s < u; ++s)
    for (std::size_t t = 0; t < u; ++t)
      orthogonal[s * u + t] = dot(f, space.coords(units[s]), space.coords(units[t])) == 0;

  std::vector<OrthogonalMatrix> out;
  std::vector<std::size_t> chosen;
  chosen.reserve(n);
  // Depth-first over rows; candidates for each row ascend, so output is
  // lexicographic in the row indices.
  auto extend = [&](auto&& self) -> void {
    if (chosen.size() == n) {
      if (out.size() >= max_matrices)
        throw Error(ErrorCode::TooLarge, "more than " + std::to_string(max_matrices) + " orthogonal matrices");
      std::vector<ElemIndex> entries;
      entries.reserve(std::size_t{n} * n);
      for (auto s : chosen) {
        const auto row = space.coords(units[s]);
        entries.insert(entries.end(), row.begin(), row.end());
      }
      out.emplace_back(space.field(), n, std::move(entries));
      return;
    }
    for (std::size_t t = 0; t < u; ++t) {
      bool ok = true;
      for (auto s : chosen) ok = ok && orthogonal[s * u + t];
      if (!ok) continue;
      chosen.push_back(t);
      self(self);
      chosen.pop_back();
    }
  };
  extend(extend);
  return out;
}

std::vector<OrthogonalMatrix> reflections(const AffineSpace& space) {
  const auto& f = space.f();
  const unsigned n = space.n();
  const ElemIndex two = f.add(1, 1);
  std::vector<OrthogonalMatrix> out;
  for (PointIndex k = 1; k < space.size(); ++k) {
    const auto v = space.coords(k);
    const auto lead = std::find_if(v.begin(), v.end(), [](ElemIndex c) { return c != 0; });
    if (*lead != 1 || space.norm(k) == 0) continue;
    const ElemIndex scale = f.mul(two, f.inv(space.norm(k)));
    std::vector<ElemIndex> e(std::size_t{n} * n);
    for (unsigned r = 0; r < n; ++r)
      for (unsigned c = 0; c < n; ++c)
        e[r * n + c] = f.sub(r == c ? 1 : 0, f.mul(scale, f.mul(v[r], v[c])));
    out.emplace_back(space.field(), n, std::move(e));
  }
  return out;
}

std::uint64_t semiaffine_order_formula(const AffineSpace& space, std::uint64_t orthogonal_count) {
  return std::uint64_t{space.size()} * space.f().h() * (space.q() - 1) * orthogonal_count / 2;
}

std::vector<PointPermutation> semiaffine_group(const AffineSpace& space, std::uint64_t max_entries) {
  const auto& f = space.f();
  const auto orth = enumerate_orthogonal(space);
  const std::uint64_t expected = semiaffine_order_formula(space, orth.size());
  if (expected > max_entries / space.size())
    throw Error(ErrorCode::TooLarge, "semiaffine group of order ~" + std::to_string(expected) + " is too large");

  std::unordered_set<PointPermutation, PermutationHash> elements;
  elements.reserve(expected);
  for (unsigned i = 0; i < f.h(); ++i) {
    for (ElemIndex a = 1; a < f.q(); ++a) {
      // (-a, -A) induces the same map as (a, A); enumerate normalized pairs only.
      if (f.neg(a) < a) continue;
      for (const auto& A : orth) {
        const auto linear = linear_images(space, a, i, A.entries());
        for (PointIndex b = 0; b < space.size(); ++b) {
          std::vector<PointIndex> images(linear);
          for (auto& v : images) v = space.add(v, b);
          elements.insert(PointPermutation::unchecked(std::move(images)));
        }
      }
    }
  }
  std::vector<PointPermutation> out(elements.begin(), elements.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SemiaffineMap> recognize_semiaffine(const PointPermutation& perm, const AffineSpace& space) {
  check_space(space, perm.size());
  check_bijection(perm);
  const auto& f = space.f();
  const unsigned n = space.n();
  const PointIndex b = perm(0);

  std::vector<ElemIndex> basis_images(std::size_t{n} * n);
  for (unsigned j = 0; j < n; ++j) {
    const auto row = space.coords(space.sub(perm(space.unit(j)), b));
    std::copy(row.begin(), row.end(), basis_images.begin() + std::size_t{j} * n);
  }

  std::vector<ElemIndex> image(n);
  for (unsigned i = 0; i < f.h(); ++i) {
    bool matches = true;
    for (PointIndex x = 0; x < space.size() && matches; ++x) {
      semilinear_image(f, n, space.coords(x), i, basis_images, image);
      matches = space.index_of(image) == space.sub(perm(x), b);
    }
    if (!matches) continue;
    const auto c = gram_scalar(f, n, basis_images);
    if (!c || *c == 0 || !f.is_square(*c)) continue;
    ElemIndex a = 1;
    while (f.square(a) != *c) ++a;
    std::vector<ElemIndex> entries = basis_images;
    const ElemIndex a_inv = f.inv(a);
    for (auto& e : entries) e = f.mul(a_inv, e);
    SemiaffineMap m{FieldElement(space.field(), a), i, OrthogonalMatrix(space.field(), n, std::move(entries)),
                    space.point(b)};
    return m.normalized();
  }
  return std::nullopt;
}

bool preserves_integral(const PointPermutation& perm, const AffineSpace& space) {
  check_space(space, perm.size());
  for (PointIndex x = 0; x < space.size(); ++x)
    for (PointIndex y = x + 1; y < space.size(); ++y)
      if (space.is_integral(x, y) != space.is_integral(perm(x), perm(y))) return false;
  return true;
}

bool satisfies_zero_iff(const PointPermutation& perm, const AffineSpace& space) {
  check_space(space, perm.size());
  for (PointIndex x = 0; x < space.size(); ++x)
    for (PointIndex y = x + 1; y < space.size(); ++y)
      if ((space.distance(x, y) == 0) != (space.distance(perm(x), perm(y)) == 0)) return false;
  return true;
}

bool preserves_cones(const PointPermutation& perm, const AffineSpace& space) {
  check_space(space, perm.size());
  const auto base_cone = space.cone(0);
  bool preserved = true;
  std::vector<PointIndex> image, target;
  for (PointIndex a = 0; a < space.size() && preserved; ++a) {
    image.clear();
    target.clear();
    const PointIndex a_image = perm(a);
    for (PointIndex c : base_cone) {
      image.push_back(perm(space.add(a, c)));
      target.push_back(space.add(a_image, c));
    }
    std::sort(image.begin(), image.end());
    std::sort(target.begin(), target.end());
    preserved = image == target;
  }
  if (preserved != satisfies_zero_iff(perm, space))
    throw Error(ErrorCode::InternalInconsistency, "cone preservation disagrees with the zero-distance test");
  return preserved;
}

}  // namespace intaut
