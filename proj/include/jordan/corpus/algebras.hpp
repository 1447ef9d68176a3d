#pragma once

#include "jordan/algebra/constructions.hpp"
#include "jordan/exact/composition.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace jordan {

inline std::string field_suffix(const FieldDesc& f) { return f.is_prime_field() ? "F_" + std::to_string(f.p) : "Q"; }

/// Matrix units e_ij (index i*n + j) of M_n with the associative product.
template <FieldScalar S>
AssociativeData<S> matrix_units(std::size_t n, const FieldDesc& f) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix size must be positive");
  AssociativeData<S> D{"M_" + std::to_string(n) + "(" + field_suffix(f) + ")", f, {}, {}, std::nullopt};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) D.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  D.products.assign(n * n * n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) D.products[(i * n + j) * n * n + (j * n + l)] = {{i * n + l, f.one<S>()}};
  Vec<S> unit = zero_vec<S>(f, n * n);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one<S>();
  D.unit = unit;
  return D;
}

/// M_n^+ with x . y = (xy + yx)/2.
template <FieldScalar S>
JordanAlgebra<S> full_matrix_jordan(std::size_t n, const FieldDesc& f) {
  auto A = special_from_associative(matrix_units<S>(n, f));
  return renamed(A, A.name() + "^+");
}

/// E2 = F1 + Fe12 inside M_2.
template <FieldScalar S>
JordanAlgebra<S> example2(const FieldDesc& f) {
  AlgebraBuilder<S> b("E2(" + field_suffix(f) + ")", f, std::vector<std::string>{"1", "e12"});
  b.add(0, 0, 0, 1).add(0, 1, 1, 1);
  Vec<S> u = zero_vec<S>(f, 2);
  u[0] = f.one<S>();
  b.unit(Element<S>(std::move(u)));
  return b.build();
}

namespace detail {

inline std::vector<std::string> nil_labels(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back("e" + std::to_string(2 * i - 1) + "," + std::to_string(2 * i));
  return out;
}

}  // namespace detail

/// E3(k) = F1 + sum_i F e_{2i-1,2i}; the nilpotent generators multiply to 0.
template <FieldScalar S>
JordanAlgebra<S> example3(std::size_t k, const FieldDesc& f) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  std::vector<std::string> labels{"1"};
  for (auto& l : detail::nil_labels(k)) labels.push_back(l);
  AlgebraBuilder<S> b("E3(" + std::to_string(k) + "," + field_suffix(f) + ")", f, labels);
  b.add(0, 0, 0, 1);
  for (std::size_t i = 1; i <= k; ++i) b.add(0, i, i, 1);
  Vec<S> u = zero_vec<S>(f, k + 1);
  u[0] = f.one<S>();
  b.unit(Element<S>(std::move(u)));
  return b.build();
}

/// NU(k) = sum_i F e_{2i-1,2i} with zero product.
template <FieldScalar S>
JordanAlgebra<S> nonunital_nil(std::size_t k, const FieldDesc& f) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  return AlgebraBuilder<S>("NU(" + std::to_string(k) + "," + field_suffix(f) + ")", f, detail::nil_labels(k)).build();
}

namespace detail {

template <FieldScalar S>
using CMatrix = std::vector<std::vector<CompositionScalar<S>>>;

template <FieldScalar S>
CMatrix<S> cmat_mul(const CMatrix<S>& a, const CMatrix<S>& b, const FieldDesc& f, std::size_t degree) {
  const std::size_t n = a.size();
  CMatrix<S> out(n, std::vector<CompositionScalar<S>>(n, CompositionScalar<S>::zero(f, degree)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) out[i][j] = out[i][j] + cd_mul(a[i][k], b[k][j]);
    }
  return out;
}

/// Basis of H_n(C): diagonal units, then for i < j and each composition unit
/// u_k the matrix u_k E_ij + conj(u_k) E_ji.
template <FieldScalar S>
struct HermitianBasis {
  std::size_t n, degree;
  std::vector<std::string> labels;
  std::vector<CMatrix<S>> mats;
  std::vector<std::size_t> off_offset;  // index of the first u_k entry for pair (i, j)
};

template <FieldScalar S>
HermitianBasis<S> hermitian_basis(std::size_t n, std::size_t degree, const FieldDesc& f) {
  HermitianBasis<S> hb{n, degree, {}, {}, {}};
  auto zero = [&] {
    return CMatrix<S>(n, std::vector<CompositionScalar<S>>(n, CompositionScalar<S>::zero(f, degree)));
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto m = zero();
    m[i][i] = CompositionScalar<S>::unit(f, degree, 0);
    hb.mats.push_back(std::move(m));
    hb.labels.push_back("e" + std::to_string(i + 1) + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < degree; ++k) {
        auto m = zero();
        auto u = CompositionScalar<S>::unit(f, degree, k);
        m[i][j] = u;
        m[j][i] = u.conjugate();
        hb.mats.push_back(std::move(m));
        std::string l = "h" + std::to_string(i + 1) + std::to_string(j + 1);
        hb.labels.push_back(degree == 1 ? l : l + "." + std::to_string(k));
      }
  return hb;
}

/// Coordinates of a hermitian matrix in the basis above.
template <FieldScalar S>
Vec<S> hermitian_coords(const CMatrix<S>& m, std::size_t degree, const FieldDesc& f) {
  const std::size_t n = m.size();
  Vec<S> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(m[i][i].coords()[0]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < degree; ++k) out.push_back(m[i][j].coords()[k]);
  (void)f;
  return out;
}

}  // namespace detail

/// H_n(C) with the symmetrized matrix product, for a composition algebra C of
/// the given degree. No size check: degree 8 with n > 3 gives a table that
/// fails validation.
template <FieldScalar S>
JordanAlgebra<S> hermitian_table_unchecked(std::size_t n, std::size_t degree, const FieldDesc& f) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix size must be positive");
  auto hb = detail::hermitian_basis<S>(n, degree, f);
  static const char* names[] = {"", "", "C", "", "H", "", "", "", "O"};
  std::string cname = degree == 1 ? field_suffix(f) : std::string(names[degree]) + "," + field_suffix(f);
  AlgebraBuilder<S> b("H_" + std::to_string(n) + "(" + cname + ")", f, hb.labels);
  const S half = inverse(f.make<S>(2));
  const std::size_t dim = hb.mats.size();
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t c = a; c < dim; ++c) {
      auto ab = detail::cmat_mul(hb.mats[a], hb.mats[c], f, degree);
      auto ba = detail::cmat_mul(hb.mats[c], hb.mats[a], f, degree);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ab[i][j] = half * (ab[i][j] + ba[i][j]);
      Vec<S> v = detail::hermitian_coords(ab, degree, f);
      b.set(a, c, std::span<const S>(v));
    }
  Vec<S> unit = zero_vec<S>(f, dim);
  for (std::size_t i = 0; i < n; ++i) unit[i] = f.one<S>();
  b.unit(Element<S>(std::move(unit)));
  return b.build();
}

template <FieldScalar S>
JordanAlgebra<S> hermitian_matrix_algebra(std::size_t n, std::size_t degree, const FieldDesc& f) {
  if (degree != 1 && degree != 2 && degree != 4 && degree != 8)
    throw Error(ErrorCode::DegreeMismatch, "composition degree must be 1, 2, 4 or 8");
  if (degree == 8 && n > 3)
    throw Error(ErrorCode::InvalidOctonionSize, "octonion hermitian matrices are Jordan only for n <= 3");
  return hermitian_table_unchecked<S>(n, degree, f);
}

/// The hermitian matrix with the given coordinates (inverse of the basis map).
template <FieldScalar S>
std::vector<std::vector<CompositionScalar<S>>> hermitian_matrix_of(std::size_t n, std::size_t degree,
                                                                    const FieldDesc& f, const Element<S>& x) {
  auto hb = detail::hermitian_basis<S>(n, degree, f);
  detail::CMatrix<S> m(n, std::vector<CompositionScalar<S>>(n, CompositionScalar<S>::zero(f, degree)));
  for (std::size_t k = 0; k < hb.mats.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i][j] + x[k] * hb.mats[k][i][j];
  return m;
}

/// First m components of the sequence algebra: H_n(C)^m with componentwise product.
template <FieldScalar S>
JordanAlgebra<S> truncated_sequence_algebra(std::size_t m, std::size_t n, std::size_t degree, const FieldDesc& f) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "need at least one component");
  auto H = hermitian_matrix_algebra<S>(n, degree, f);
  JordanAlgebra<S> acc = H;
  for (std::size_t i = 1; i < m; ++i) acc = direct_sum(acc, H);
  return renamed(acc, H.name() + "^" + std::to_string(m));
}

/// A Jordan subalgebra of M_n^+ together with its basis matrices.
template <FieldScalar S>
struct RandomSpecial {
  JordanAlgebra<S> algebra;
  std::size_t matrix_size = 0;
  std::vector<Vec<S>> basis;  // row-major n x n matrices
  std::uint64_t seed = 0;

  /// Associative product of two elements, written back in algebra coordinates
  /// when the result lies in the subalgebra span (used by the axa oracle).
  Vec<S> matrix_of(const Element<S>& x) const {
    Vec<S> out = zero_vec<S>(algebra.field(), matrix_size * matrix_size);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += x[k] * basis[k][i];
    return out;
  }
};

namespace detail {

template <FieldScalar S>
Vec<S> mat_mul(const Vec<S>& a, const Vec<S>& b, std::size_t n, const FieldDesc& f) {
  Vec<S> out = zero_vec<S>(f, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(a[i * n + k])) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  return out;
}

template <FieldScalar S>
Vec<S> jordan_mat(const Vec<S>& a, const Vec<S>& b, std::size_t n, const FieldDesc& f) {
  Vec<S> ab = mat_mul(a, b, n, f), ba = mat_mul(b, a, n, f);
  const S half = inverse(f.make<S>(2));
  for (std::size_t i = 0; i < ab.size(); ++i) ab[i] = half * (ab[i] + ba[i]);
  return ab;
}

}  // namespace detail

/// Jordan closure of one or two random matrices (optionally with the identity)
/// in M_n, n in {2, 3}, kept when its dimension is at most dim_bound.
template <FieldScalar S>
RandomSpecial<S> random_special_algebra(std::uint64_t seed, const FieldDesc& f, std::size_t dim_bound) {
  if (dim_bound == 0) throw Error(ErrorCode::InvalidArgument, "dimension bound must be positive");
  std::mt19937_64 rng(seed);
  const std::int64_t range = f.is_prime_field() ? static_cast<std::int64_t>(f.p) : 5;
  auto draw = [&](std::uint64_t bound) { return static_cast<std::int64_t>(rng() % bound); };
  for (;;) {
    const std::size_t n = 2 + static_cast<std::size_t>(draw(2));
    const std::size_t gens = 1 + static_cast<std::size_t>(draw(2));
    const bool with_identity = draw(2) == 0;
    std::vector<Vec<S>> rows;
    if (with_identity) {
      Vec<S> id = zero_vec<S>(f, n * n);
      for (std::size_t i = 0; i < n; ++i) id[i * n + i] = f.one<S>();
      rows.push_back(std::move(id));
    }
    for (std::size_t g = 0; g < gens; ++g) {
      Vec<S> m = zero_vec<S>(f, n * n);
      const bool strictly_upper = draw(3) == 0;  // nilpotent generators now and then
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (strictly_upper && j <= i) continue;
          if (draw(2) == 0) m[i * n + j] = f.make<S>(draw(static_cast<std::uint64_t>(range)) - (f.is_prime_field() ? 0 : 2));
        }
      rows.push_back(std::move(m));
    }
    Subspace<S> V = Subspace<S>::span(f, n * n, rows);
    bool too_big = V.rank() > dim_bound || V.rank() == 0;
    while (!too_big) {
      std::vector<Vec<S>> next = V.basis();
      for (std::size_t a = 0; a < V.rank(); ++a)
        for (std::size_t b = a; b < V.rank(); ++b) next.push_back(detail::jordan_mat(V.basis()[a], V.basis()[b], n, f));
      Subspace<S> W = Subspace<S>::span(f, n * n, std::move(next));
      if (W.rank() == V.rank()) break;
      V = std::move(W);
      too_big = V.rank() > dim_bound;
    }
    if (too_big) continue;
    const std::size_t dim = V.rank();
    AlgebraBuilder<S> b("random(" + std::to_string(seed) + "," + field_suffix(f) + ")", f, dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t c = a; c < dim; ++c) {
        Vec<S> prod = detail::jordan_mat(V.basis()[a], V.basis()[c], n, f);
        Vec<S> coords = V.coordinates(prod);
        b.set(a, c, std::span<const S>(coords));
      }
    JordanAlgebra<S> A = with_unit(b.build());
    return RandomSpecial<S>{A, n, V.basis(), seed};
  }
}

}  // namespace jordan
