#pragma once

#include "jordan/exact/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace jordan {

template <FieldScalar S>
using Vec = std::vector<S>;

template <FieldScalar S>
Vec<S> zero_vec(const FieldDesc& f, std::size_t n) {
  return Vec<S>(n, f.zero<S>());
}

template <FieldScalar S>
bool is_zero_vec(std::span<const S> v) {
  return std::all_of(v.begin(), v.end(), [](const S& x) { return is_zero(x); });
}

template <FieldScalar S>
void axpy(const S& a, std::span<const S> x, std::span<S> y) {
  if (is_zero(a)) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) y[i] += a * x[i];
}

/// Dense row-major matrix over the base field. Operators act on column vectors.
template <FieldScalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldDesc& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero<S>()) {}

  static Matrix identity(const FieldDesc& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one<S>();
    return m;
  }

  const FieldDesc& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<S> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  Vec<S> column(std::size_t c) const {
    Vec<S> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void set_column(std::size_t c, std::span<const S> v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Vec<S> apply(std::span<const S> x) const {
    Vec<S> out = zero_vec<S>(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_zero(x[c])) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const S& m = (*this)(r, c);
        if (!is_zero(m)) out[r] += m * x[c];
      }
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero_matrix() const { return is_zero_vec<S>(data_); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (!is_zero(bkj)) out(i, j) += aik * bkj;
        }
      }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const S& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<S>& data() const { return data_; }

 private:
  FieldDesc field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Linear subspace of F^n kept in reduced row echelon form. Two equal
/// subspaces have identical bases, so equality is representation equality.
template <FieldScalar S>
class Subspace {
 public:
  Subspace() = default;
  Subspace(const FieldDesc& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  static Subspace full(const FieldDesc& f, std::size_t n) {
    Subspace s(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec<S> row = zero_vec<S>(f, n);
      row[i] = f.one<S>();
      s.basis_.push_back(std::move(row));
      s.pivots_.push_back(i);
    }
    return s;
  }

  /// Canonical basis of the span of the given vectors.
  static Subspace span(const FieldDesc& f, std::size_t n, std::vector<Vec<S>> rows) {
    Subspace s(f, n);
    s.reduce_rows(std::move(rows));
    return s;
  }

  const FieldDesc& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec<S>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates outside the pivot set, ascending; a complement basis.
  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (k < pivots_.size() && pivots_[k] == c) {
        ++k;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  /// x minus its component along the pivots; zero iff x lies in the subspace.
  Vec<S> reduce(Vec<S> x) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      S c = x[pivots_[r]];
      if (!jordan::is_zero(c)) axpy<S>(-c, basis_[r], x);
    }
    return x;
  }

  bool contains(std::span<const S> x) const {
    check_ambient(x.size());
    return is_zero_vec<S>(reduce(Vec<S>(x.begin(), x.end())));
  }

  bool contains(const Subspace& other) const {
    check_ambient(other.ambient_);
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec<S>& v) { return contains(v); });
  }

  /// Coefficients of x in the stored basis (x must lie in the subspace).
  Vec<S> coordinates(std::span<const S> x) const {
    Vec<S> out;
    out.reserve(pivots_.size());
    for (auto p : pivots_) out.push_back(x[p]);
    return out;
  }

  Vec<S> combine(std::span<const S> coeffs) const {
    Vec<S> out = zero_vec<S>(field_, ambient_);
    for (std::size_t r = 0; r < basis_.size(); ++r) axpy<S>(coeffs[r], basis_[r], out);
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

  void check_ambient(std::size_t n) const {
    if (n != ambient_)
      throw Error(ErrorCode::AmbientMismatch,
                  "ambient dimension " + std::to_string(n) + " vs " + std::to_string(ambient_));
  }

 private:
  void reduce_rows(std::vector<Vec<S>> rows) {
    std::size_t lead = 0;
    std::size_t r = 0;
    for (; lead < ambient_ && r < rows.size(); ++lead) {
      std::size_t sel = r;
      while (sel < rows.size() && jordan::is_zero(rows[sel][lead])) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[sel], rows[r]);
      S inv = inverse(rows[r][lead]);
      for (auto& v : rows[r]) v = v * inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r) continue;
        S c = rows[i][lead];
        if (!jordan::is_zero(c)) axpy<S>(-c, rows[r], rows[i]);
      }
      pivots_.push_back(lead);
      ++r;
    }
    rows.resize(r);
    basis_ = std::move(rows);
  }

  FieldDesc field_;
  std::size_t ambient_ = 0;
  std::vector<Vec<S>> basis_;
  std::vector<std::size_t> pivots_;
};

template <FieldScalar S>
Subspace<S> rref(const Matrix<S>& m) {
  std::vector<Vec<S>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return Subspace<S>::span(m.field(), m.cols(), std::move(rows));
}

/// {x : Mx = 0}.
template <FieldScalar S>
Subspace<S> kernel(const Matrix<S>& m) {
  const FieldDesc& f = m.field();
  Subspace<S> row_space = rref(m);
  std::vector<Vec<S>> out;
  const auto& pivots = row_space.pivots();
  for (std::size_t free : row_space.non_pivots()) {
    Vec<S> v = zero_vec<S>(f, m.cols());
    v[free] = f.one<S>();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -row_space.basis()[r][free];
    out.push_back(std::move(v));
  }
  return Subspace<S>::span(f, m.cols(), std::move(out));
}

/// Column space {Mx}.
template <FieldScalar S>
Subspace<S> image(const Matrix<S>& m) {
  return rref(m.transpose());
}

template <FieldScalar S>
Subspace<S> sum(const Subspace<S>& v, const Subspace<S>& w) {
  v.check_ambient(w.ambient_dim());
  std::vector<Vec<S>> rows = v.basis();
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  return Subspace<S>::span(v.field(), v.ambient_dim(), std::move(rows));
}

/// Vectors orthogonal (dot product) to every vector of v.
template <FieldScalar S>
Subspace<S> orthogonal_complement(const Subspace<S>& v) {
  Matrix<S> m(v.field(), v.rank(), v.ambient_dim());
  for (std::size_t r = 0; r < v.rank(); ++r)
    for (std::size_t c = 0; c < v.ambient_dim(); ++c) m(r, c) = v.basis()[r][c];
  return kernel(m);
}

template <FieldScalar S>
Subspace<S> intersect(const Subspace<S>& v, const Subspace<S>& w) {
  v.check_ambient(w.ambient_dim());
  if (v.is_zero() || w.is_zero()) return Subspace<S>(v.field(), v.ambient_dim());
  // x = sum c_r v_r lies in w iff every functional vanishing on w kills it.
  Subspace<S> checks = orthogonal_complement(w);
  if (checks.is_zero()) return v;
  Matrix<S> m(v.field(), checks.rank(), v.rank());
  for (std::size_t i = 0; i < checks.rank(); ++i)
    for (std::size_t r = 0; r < v.rank(); ++r) {
      S acc = v.field().template zero<S>();
      for (std::size_t c = 0; c < v.ambient_dim(); ++c) acc += checks.basis()[i][c] * v.basis()[r][c];
      m(i, r) = acc;
    }
  Subspace<S> coeffs = kernel(m);
  std::vector<Vec<S>> rows;
  for (const auto& c : coeffs.basis()) rows.push_back(v.combine(c));
  return Subspace<S>::span(v.field(), v.ambient_dim(), std::move(rows));
}

template <FieldScalar S>
bool equals(const Subspace<S>& v, const Subspace<S>& w) {
  v.check_ambient(w.ambient_dim());
  return v == w;
}

template <FieldScalar S>
Subspace<S> apply(const Matrix<S>& m, const Subspace<S>& v) {
  std::vector<Vec<S>> rows;
  for (const auto& b : v.basis()) rows.push_back(m.apply(b));
  return Subspace<S>::span(m.field(), m.rows(), std::move(rows));
}

/// Solves Mx = b; nullopt when inconsistent. Free variables are set to zero.
template <FieldScalar S>
std::optional<Vec<S>> solve(const Matrix<S>& m, std::span<const S> b) {
  const FieldDesc& f = m.field();
  Matrix<S> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Subspace<S> red = rref(aug);
  Vec<S> x = zero_vec<S>(f, m.cols());
  for (std::size_t r = 0; r < red.rank(); ++r) {
    std::size_t p = red.pivots()[r];
    if (p == m.cols()) return std::nullopt;
    x[p] = red.basis()[r][m.cols()];
  }
  return x;
}

}  // namespace jordan
