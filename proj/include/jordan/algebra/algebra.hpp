#pragma once

#include "jordan/exact/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jordan {

template <FieldScalar S>
struct Term {
  std::size_t index;
  S coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse coefficient vector, sorted by index, no zero coefficients.
template <FieldScalar S>
using SparseVec = std::vector<Term<S>>;

template <FieldScalar S>
SparseVec<S> canonical_sparse(SparseVec<S> v) {
  std::sort(v.begin(), v.end(), [](const Term<S>& a, const Term<S>& b) { return a.index < b.index; });
  SparseVec<S> out;
  for (auto& t : v) {
    if (!out.empty() && out.back().index == t.index)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term<S>& t) { return is_zero(t.coeff); });
  return out;
}

template <FieldScalar S>
SparseVec<S> to_sparse(std::span<const S> v) {
  SparseVec<S> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.push_back({i, v[i]});
  return out;
}

/// Coefficient vector of an algebra element.
template <FieldScalar S>
class Element {
 public:
  Element() = default;
  explicit Element(Vec<S> coords) : coords_(std::move(coords)) {}

  const Vec<S>& coords() const { return coords_; }
  Vec<S>& coords() { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  S& operator[](std::size_t i) { return coords_[i]; }
  bool is_zero() const { return is_zero_vec<S>(coords_); }

  friend Element operator+(Element a, const Element& b) {
    check(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a.coords_[i] += b.coords_[i];
    return a;
  }
  friend Element operator-(Element a, const Element& b) {
    check(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a.coords_[i] -= b.coords_[i];
    return a;
  }
  friend Element operator-(Element a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend Element operator*(const S& s, Element a) {
    for (auto& c : a.coords_) c = s * c;
    return a;
  }
  friend bool operator==(const Element& a, const Element& b) { return a.coords_ == b.coords_; }

  static void check(const Element& a, const Element& b) {
    if (a.size() != b.size())
      throw Error(ErrorCode::AlgebraMismatch,
                  "elements of dimension " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }

 private:
  Vec<S> coords_;
};

/// Finite-dimensional commutative algebra given by structure constants
/// b_i b_j = sum_k c_ij^k b_k. Only i <= j is stored.
template <FieldScalar S>
class JordanAlgebra {
 public:
  JordanAlgebra() = default;

  /// `upper` is indexed by pair_index(i, j) for i <= j.
  JordanAlgebra(std::string name, FieldDesc field, std::vector<std::string> labels,
                std::vector<SparseVec<S>> upper, std::optional<Element<S>> unit = std::nullopt)
      : name_(std::move(name)), field_(field), dim_(labels.size()), labels_(std::move(labels)),
        table_(std::move(upper)), unit_(std::move(unit)) {
    if (table_.size() != dim_ * (dim_ + 1) / 2)
      throw Error(ErrorCode::InvalidArgument, "product table size does not match dimension");
    for (auto& v : table_) {
      v = canonical_sparse<S>(std::move(v));
      for (const auto& t : v)
        if (t.index >= dim_) throw Error(ErrorCode::IndexOutOfRange, "product index " + std::to_string(t.index));
    }
    if (unit_ && unit_->size() != dim_) throw Error(ErrorCode::AlgebraMismatch, "unit has wrong dimension");
    build_left_ops();
  }

  static std::size_t pair_index(std::size_t i, std::size_t j, std::size_t dim) {
    if (i > j) std::swap(i, j);
    return i * dim - i * (i - 1) / 2 + (j - i);
  }

  const std::string& name() const { return name_; }
  const FieldDesc& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<Element<S>>& unit() const { return unit_; }
  bool has_unit() const { return unit_.has_value(); }

  const SparseVec<S>& product(std::size_t i, std::size_t j) const { return table_[pair_index(i, j, dim_)]; }
  const std::vector<SparseVec<S>>& table() const { return table_; }

  S scalar(std::int64_t v) const { return field_.make<S>(v); }
  Element<S> zero() const { return Element<S>(zero_vec<S>(field_, dim_)); }
  Element<S> basis(std::size_t i) const {
    Element<S> e = zero();
    e[i] = field_.one<S>();
    return e;
  }
  Element<S> element(std::vector<std::int64_t> coords) const {
    check_dim(coords.size());
    Vec<S> v;
    for (auto c : coords) v.push_back(scalar(c));
    return Element<S>(std::move(v));
  }
  const Element<S>& unit_or_throw() const {
    if (!unit_) throw Error(ErrorCode::NotUnital, name_ + " has no unit");
    return *unit_;
  }

  Element<S> mul(const Element<S>& a, const Element<S>& b) const {
    check(a);
    check(b);
    Vec<S> acc = zero_vec<S>(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (jordan::is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (jordan::is_zero(b[j])) continue;
        S ab = a[i] * b[j];
        for (const auto& t : product(i, j)) acc[t.index] += ab * t.coeff;
      }
    }
    return Element<S>(std::move(acc));
  }

  Element<S> square(const Element<S>& a) const { return mul(a, a); }

  /// Left-normed power: a^1 = a, a^(n+1) = a a^n.
  Element<S> power(const Element<S>& a, std::size_t n) const {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "power exponent must be positive");
    Element<S> acc = a;
    for (std::size_t k = 1; k < n; ++k) acc = mul(a, acc);
    return acc;
  }

  /// Matrix of x -> a x.
  Matrix<S> left_op(const Element<S>& a) const {
    check(a);
    Matrix<S> m(field_, dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k)
      if (!jordan::is_zero(a[k])) m = m + a[k] * left_basis_[k];
    return m;
  }

  const Matrix<S>& left_basis_op(std::size_t k) const { return left_basis_[k]; }

  /// Matrix of x -> 2(a x)a - a^2 x.
  Matrix<S> u_op(const Element<S>& a) const {
    Matrix<S> la = left_op(a);
    return scalar(2) * (la * la) - left_op(square(a));
  }

  /// U_a x = 2(a x)a - a^2 x.
  Element<S> u(const Element<S>& a, const Element<S>& x) const {
    return scalar(2) * mul(mul(a, x), a) - mul(square(a), x);
  }

  /// {a b c} = (ab)c + (cb)a - (ac)b.
  Element<S> triple(const Element<S>& a, const Element<S>& b, const Element<S>& c) const {
    return mul(mul(a, b), c) + mul(mul(c, b), a) - mul(mul(a, c), b);
  }

  bool is_idempotent(const Element<S>& e) const { return square(e) == e; }

  /// Nilpotent iff some power up to dim + 1 vanishes (index bound of a
  /// nilpotent element in a power-associative algebra of this dimension).
  bool is_nilpotent(const Element<S>& a) const {
    Element<S> acc = a;
    for (std::size_t k = 1; k <= dim_ + 1; ++k) {
      if (acc.is_zero()) return true;
      acc = mul(a, acc);
    }
    return acc.is_zero();
  }

  void check(const Element<S>& a) const { check_dim(a.size()); }

  std::string format(const Element<S>& a) const {
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (jordan::is_zero(a[i])) continue;
      if (!out.empty()) out += " + ";
      std::string c = display_scalar(a[i]);
      out += (c == "1" ? "" : c + "*") + labels_[i];
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_dim(std::size_t n) const {
    if (n != dim_)
      throw Error(ErrorCode::AlgebraMismatch,
                  "element of dimension " + std::to_string(n) + " in algebra of dimension " + std::to_string(dim_));
  }

  void build_left_ops() {
    left_basis_.assign(dim_, Matrix<S>(field_, dim_, dim_));
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t c = 0; c < dim_; ++c)
        for (const auto& t : product(k, c)) left_basis_[k](t.index, c) = t.coeff;
  }

  std::string name_;
  FieldDesc field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec<S>> table_;
  std::optional<Element<S>> unit_;
  std::vector<Matrix<S>> left_basis_;
};

/// Incremental construction of a product table; later entries for the same
/// unordered pair accumulate.
template <FieldScalar S>
class AlgebraBuilder {
 public:
  AlgebraBuilder(std::string name, FieldDesc field, std::vector<std::string> labels)
      : name_(std::move(name)), field_(field), labels_(std::move(labels)),
        upper_(labels_.size() * (labels_.size() + 1) / 2) {}

  AlgebraBuilder(std::string name, FieldDesc field, std::size_t dim)
      : AlgebraBuilder(std::move(name), field, default_labels(dim)) {}

  static std::vector<std::string> default_labels(std::size_t dim) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim; ++i) out.push_back("b" + std::to_string(i));
    return out;
  }

  std::size_t dim() const { return labels_.size(); }
  const FieldDesc& field() const { return field_; }

  AlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t k, const S& c) {
    if (i >= dim() || j >= dim() || k >= dim()) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
    upper_[JordanAlgebra<S>::pair_index(i, j, dim())].push_back({k, c});
    return *this;
  }
  AlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t k, std::int64_t c) {
    return add(i, j, k, field_.make<S>(c));
  }
  AlgebraBuilder& set(std::size_t i, std::size_t j, std::span<const S> v) {
    auto& slot = upper_[JordanAlgebra<S>::pair_index(i, j, dim())];
    slot = to_sparse<S>(v);
    return *this;
  }
  AlgebraBuilder& unit(Element<S> u) {
    unit_ = std::move(u);
    return *this;
  }

  JordanAlgebra<S> build() const { return JordanAlgebra<S>(name_, field_, labels_, upper_, unit_); }

 private:
  std::string name_;
  FieldDesc field_;
  std::vector<std::string> labels_;
  std::vector<SparseVec<S>> upper_;
  std::optional<Element<S>> unit_;
};

}  // namespace jordan
