#pragma once

#include "jordan/algebra/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jordan {

/// Solves u b_i = b_i for all i; nullopt when no unit exists.
template <FieldScalar S>
std::optional<Element<S>> detect_unit(const JordanAlgebra<S>& A) {
  const std::size_t n = A.dim();
  if (n == 0) return std::nullopt;
  // Unknown u: sum_k u_k (b_k b_i) = b_i, giving n*n equations.
  Matrix<S> m(A.field(), n * n, n);
  Vec<S> rhs = zero_vec<S>(A.field(), n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& t : A.product(k, i)) m(i * n + t.index, k) = t.coeff;
    rhs[i * n + i] = A.scalar(1);
  }
  auto sol = solve(m, std::span<const S>(rhs));
  if (!sol) return std::nullopt;
  return Element<S>(std::move(*sol));
}

/// Same algebra with the unit recorded (detected if not given).
template <FieldScalar S>
JordanAlgebra<S> with_unit(const JordanAlgebra<S>& A, std::optional<Element<S>> unit = std::nullopt) {
  if (!unit) unit = detect_unit(A);
  return JordanAlgebra<S>(A.name(), A.field(), A.labels(), A.table(), std::move(unit));
}

template <FieldScalar S>
JordanAlgebra<S> renamed(const JordanAlgebra<S>& A, std::string name) {
  return JordanAlgebra<S>(std::move(name), A.field(), A.labels(), A.table(), A.unit());
}

/// F1^ (+) A with (a 1^ + x)(b 1^ + y) = ab 1^ + (a y + b x + x y). The new
/// unit is basis vector 0; A sits at indices 1..dim.
template <FieldScalar S>
JordanAlgebra<S> unital_hull(const JordanAlgebra<S>& A) {
  const std::size_t n = A.dim();
  std::vector<std::string> labels{"1^"};
  labels.insert(labels.end(), A.labels().begin(), A.labels().end());
  AlgebraBuilder<S> b(A.name() + "^", A.field(), labels);
  b.add(0, 0, 0, 1);
  for (std::size_t i = 0; i < n; ++i) b.add(0, i + 1, i + 1, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (const auto& t : A.product(i, j)) b.add(i + 1, j + 1, t.index + 1, t.coeff);
  Vec<S> unit = zero_vec<S>(A.field(), n + 1);
  unit[0] = A.scalar(1);
  b.unit(Element<S>(std::move(unit)));
  return b.build();
}

/// Image of x in the hull.
template <FieldScalar S>
Element<S> embed_in_hull(const JordanAlgebra<S>& A, const Element<S>& x) {
  A.check(x);
  Vec<S> v{A.scalar(0)};
  v.insert(v.end(), x.coords().begin(), x.coords().end());
  return Element<S>(std::move(v));
}

template <FieldScalar S>
JordanAlgebra<S> direct_sum(const JordanAlgebra<S>& A, const JordanAlgebra<S>& B, std::string name = {}) {
  if (!(A.field() == B.field())) throw Error(ErrorCode::AlgebraMismatch, "direct sum over different fields");
  const std::size_t na = A.dim(), nb = B.dim();
  std::vector<std::string> labels;
  for (const auto& l : A.labels()) labels.push_back(l + "@1");
  for (const auto& l : B.labels()) labels.push_back(l + "@2");
  if (name.empty()) name = A.name() + "+" + B.name();
  AlgebraBuilder<S> b(name, A.field(), labels);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i; j < na; ++j)
      for (const auto& t : A.product(i, j)) b.add(i, j, t.index, t.coeff);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i; j < nb; ++j)
      for (const auto& t : B.product(i, j)) b.add(na + i, na + j, na + t.index, t.coeff);
  if (A.unit() && B.unit()) {
    Vec<S> u = A.unit()->coords();
    u.insert(u.end(), B.unit()->coords().begin(), B.unit()->coords().end());
    b.unit(Element<S>(std::move(u)));
  }
  return b.build();
}

template <FieldScalar S>
struct IdealViolation {
  std::size_t basis_index;  // a in L_a
  Vec<S> ideal_vector;      // v in I
  Vec<S> product;           // a v, not in I
};

/// First (basis a, ideal basis v) pair with a v outside I.
template <FieldScalar S>
std::optional<IdealViolation<S>> ideal_violation(const JordanAlgebra<S>& A, const Subspace<S>& I) {
  I.check_ambient(A.dim());
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (const auto& v : I.basis()) {
      Vec<S> av = A.left_basis_op(a).apply(v);
      if (!I.contains(av)) return IdealViolation<S>{a, v, av};
    }
  return std::nullopt;
}

template <FieldScalar S>
bool is_ideal(const JordanAlgebra<S>& A, const Subspace<S>& I) {
  return !ideal_violation(A, I).has_value();
}

template <FieldScalar S>
struct Quotient {
  JordanAlgebra<S> algebra;
  Subspace<S> ideal;
  std::vector<std::size_t> complement;  // coordinates of A carried to the quotient basis

  Element<S> project(const Element<S>& x) const {
    Vec<S> r = ideal.reduce(x.coords());
    Vec<S> out;
    out.reserve(complement.size());
    for (auto c : complement) out.push_back(r[c]);
    return Element<S>(std::move(out));
  }

  /// Representative with zero ideal-pivot coordinates.
  Element<S> lift(const Element<S>& y) const {
    Vec<S> out = zero_vec<S>(ideal.field(), ideal.ambient_dim());
    for (std::size_t k = 0; k < complement.size(); ++k) out[complement[k]] = y[k];
    return Element<S>(std::move(out));
  }
};

/// A / I presented on the non-pivot coordinates of I's echelon basis.
template <FieldScalar S>
Quotient<S> quotient(const JordanAlgebra<S>& A, const Subspace<S>& I) {
  if (auto bad = ideal_violation(A, I)) {
    throw Error(ErrorCode::NotAnIdeal, "product of " + A.labels()[bad->basis_index] + " with " +
                                           A.format(Element<S>(bad->ideal_vector)) + " gives " +
                                           A.format(Element<S>(bad->product)) + " outside the subspace");
  }
  std::vector<std::size_t> comp = I.non_pivots();
  std::vector<std::string> labels;
  for (auto c : comp) labels.push_back("[" + A.labels()[c] + "]");
  Quotient<S> q{JordanAlgebra<S>(), I, comp};
  AlgebraBuilder<S> b(A.name() + "/I", A.field(), labels);
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = i; j < comp.size(); ++j) {
      Element<S> p = q.project(A.mul(A.basis(comp[i]), A.basis(comp[j])));
      b.set(i, j, std::span<const S>(p.coords()));
    }
  if (A.unit()) b.unit(q.project(*A.unit()));
  q.algebra = b.build();
  return q;
}

/// Associative algebra by (not necessarily symmetric) structure constants,
/// products indexed i * dim + j.
template <FieldScalar S>
struct AssociativeData {
  std::string name;
  FieldDesc field;
  std::vector<std::string> labels;
  std::vector<SparseVec<S>> products;
  std::optional<Vec<S>> unit;

  std::size_t dim() const { return labels.size(); }
  const SparseVec<S>& product(std::size_t i, std::size_t j) const { return products[i * dim() + j]; }

  Vec<S> mul(std::span<const S> a, std::span<const S> b) const {
    Vec<S> acc = zero_vec<S>(field, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(b[j])) continue;
        S ab = a[i] * b[j];
        for (const auto& t : product(i, j)) acc[t.index] += ab * t.coeff;
      }
    }
    return acc;
  }
};

template <FieldScalar S>
struct AssociativityViolation {
  std::size_t i, j, k;
};

template <FieldScalar S>
std::optional<AssociativityViolation<S>> associativity_violation(const AssociativeData<S>& D) {
  const std::size_t n = D.dim();
  auto basis = [&](std::size_t i) {
    Vec<S> v = zero_vec<S>(D.field, n);
    v[i] = D.field.template one<S>();
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<S> bi = basis(i), bj = basis(j), bk = basis(k);
        if (D.mul(D.mul(bi, bj), bk) != D.mul(bi, D.mul(bj, bk))) return AssociativityViolation<S>{i, j, k};
      }
  return std::nullopt;
}

/// Jordan algebra on the same space with x . y = (xy + yx)/2.
template <FieldScalar S>
JordanAlgebra<S> special_from_associative(const AssociativeData<S>& D) {
  if (auto bad = associativity_violation(D)) {
    throw Error(ErrorCode::NotAssociative, "(" + D.labels[bad->i] + " " + D.labels[bad->j] + ") " + D.labels[bad->k] +
                                               " differs from " + D.labels[bad->i] + " (" + D.labels[bad->j] + " " +
                                               D.labels[bad->k] + ")");
  }
  const S half = inverse(D.field.template make<S>(2));
  AlgebraBuilder<S> b(D.name, D.field, D.labels);
  for (std::size_t i = 0; i < D.dim(); ++i)
    for (std::size_t j = i; j < D.dim(); ++j) {
      for (const auto& t : D.product(i, j)) b.add(i, j, t.index, half * t.coeff);
      for (const auto& t : D.product(j, i)) b.add(i, j, t.index, half * t.coeff);
    }
  JordanAlgebra<S> A = b.build();
  if (D.unit) return with_unit(A, std::optional<Element<S>>(Element<S>(*D.unit)));
  return with_unit(A);
}

/// Span of all squares: spanned by the b_i b_j since
/// a^2 = sum a_i^2 b_i^2 + 2 sum_{i<j} a_i a_j b_i b_j.
template <FieldScalar S>
Subspace<S> squares_span(const JordanAlgebra<S>& A) {
  std::vector<Vec<S>> rows;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i; j < A.dim(); ++j) {
      Vec<S> v = zero_vec<S>(A.field(), A.dim());
      for (const auto& t : A.product(i, j)) v[t.index] = t.coeff;
      rows.push_back(std::move(v));
    }
  return Subspace<S>::span(A.field(), A.dim(), std::move(rows));
}

}  // namespace jordan
