#pragma once

#include "jordan/exact/linalg.hpp"

#include <span>
#include <string>
#include <vector>

namespace jordan {

namespace detail {

template <FieldScalar S>
void cd_conjugate(std::span<const S> x, std::span<S> out) {
  out[0] = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) out[i] = -x[i];
}

// Cayley-Dickson doubling: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
template <FieldScalar S>
void cd_product(std::span<const S> x, std::span<const S> y, std::span<S> out) {
  const std::size_t n = x.size();
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  auto a = x.first(h), b = x.last(h), c = y.first(h), d = y.last(h);
  std::vector<S> conj_c(c.begin(), c.end()), conj_d(d.begin(), d.end());
  cd_conjugate<S>(c, conj_c);
  cd_conjugate<S>(d, conj_d);
  std::vector<S> t1(h, out[0]), t2(h, out[0]);
  cd_product<S>(a, c, t1);
  cd_product<S>(std::span<const S>(conj_d), b, t2);
  for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
  cd_product<S>(d, a, t1);
  cd_product<S>(b, std::span<const S>(conj_c), t2);
  for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

}  // namespace detail

/// Element of the Cayley-Dickson algebra of degree 1, 2, 4 or 8 with norm
/// sum of squares over the base field (real, complex, quaternion and octonion forms).
template <FieldScalar S>
class CompositionScalar {
 public:
  CompositionScalar(const FieldDesc& f, std::vector<S> coords) : field_(f), coords_(std::move(coords)) {
    check_degree(coords_.size());
  }

  static CompositionScalar zero(const FieldDesc& f, std::size_t degree) {
    check_degree(degree);
    return {f, zero_vec<S>(f, degree)};
  }
  /// The k-th standard unit (k = 0 is the identity).
  static CompositionScalar unit(const FieldDesc& f, std::size_t degree, std::size_t k) {
    auto z = zero(f, degree);
    z.coords_.at(k) = f.one<S>();
    return z;
  }

  std::size_t degree() const { return coords_.size(); }
  const std::vector<S>& coords() const { return coords_; }
  const FieldDesc& field() const { return field_; }

  CompositionScalar conjugate() const {
    CompositionScalar out = *this;
    detail::cd_conjugate<S>(coords_, out.coords_);
    return out;
  }

  S norm() const {
    S acc = field_.zero<S>();
    for (const auto& c : coords_) acc += c * c;
    return acc;
  }

  bool is_zero() const { return is_zero_vec<S>(coords_); }

  friend CompositionScalar operator+(CompositionScalar a, const CompositionScalar& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
    return a;
  }
  friend CompositionScalar operator-(CompositionScalar a, const CompositionScalar& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] -= b.coords_[i];
    return a;
  }
  friend CompositionScalar operator*(const S& s, CompositionScalar a) {
    for (auto& c : a.coords_) c = s * c;
    return a;
  }
  friend bool operator==(const CompositionScalar& a, const CompositionScalar& b) {
    return a.coords_ == b.coords_;
  }

  friend CompositionScalar cd_mul(const CompositionScalar& x, const CompositionScalar& y) {
    x.check_same(y);
    CompositionScalar out = zero(x.field_, x.degree());
    detail::cd_product<S>(x.coords_, y.coords_, out.coords_);
    return out;
  }

 private:
  static void check_degree(std::size_t d) {
    if (d != 1 && d != 2 && d != 4 && d != 8)
      throw Error(ErrorCode::DegreeMismatch, "composition degree must be 1, 2, 4 or 8, got " + std::to_string(d));
  }
  void check_same(const CompositionScalar& o) const {
    if (o.degree() != degree())
      throw Error(ErrorCode::DegreeMismatch,
                  "degree " + std::to_string(degree()) + " vs " + std::to_string(o.degree()));
  }

  FieldDesc field_;
  std::vector<S> coords_;
};

}  // namespace jordan
