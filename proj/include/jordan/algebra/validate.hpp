#pragma once

#include "jordan/algebra/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jordan {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Base-p digits of `index`, most significant coordinate first.
inline void decode_index(std::uint64_t index, std::uint32_t p, std::span<ModP> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = ModP(static_cast<std::int64_t>(index % p), p);
    index /= p;
  }
}

inline std::uint64_t encode_index(std::span<const ModP> coords, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (const auto& c : coords) idx = idx * p + c.value();
  return idx;
}

struct ValidationReport {
  enum class Method { Exhaustive, Linearized };

  bool valid = true;
  Method method = Method::Linearized;
  std::uint64_t checked = 0;       // elements (exhaustive) or basis quadruples covered (linearized)
  std::string violation_kind;      // "unit" or "jordan"
  std::vector<std::size_t> tuple;  // basis indices of the violating tuple
  std::vector<std::string> witness;  // formatted elements
  std::string message;
};

inline std::string to_string(ValidationReport::Method m) {
  return m == ValidationReport::Method::Exhaustive ? "exhaustive" : "linearized";
}

namespace detail {

template <FieldScalar S>
void accumulate_basis_product(const JordanAlgebra<S>& A, const SparseVec<S>& u, std::size_t y, const S& scale,
                              Vec<S>& acc) {
  for (const auto& t : u)
    for (const auto& r : A.product(t.index, y)) acc[r.index] += scale * t.coeff * r.coeff;
}

template <FieldScalar S>
SparseVec<S> mul_sparse_basis(const JordanAlgebra<S>& A, const SparseVec<S>& u, std::size_t y) {
  Vec<S> acc = zero_vec<S>(A.field(), A.dim());
  accumulate_basis_product<S>(A, u, y, A.scalar(1), acc);
  return to_sparse<S>(acc);
}

template <FieldScalar S>
SparseVec<S> mul_sparse(const JordanAlgebra<S>& A, const SparseVec<S>& u, const SparseVec<S>& v) {
  Vec<S> acc = zero_vec<S>(A.field(), A.dim());
  for (const auto& t : v) accumulate_basis_product<S>(A, u, t.index, t.coeff, acc);
  return to_sparse<S>(acc);
}

}  // namespace detail

/// Fully linearized Jordan identity at basis vectors x1, x2, x3, y:
///   sum over the lone index k of ((x_i x_j) y) x_k - (x_i x_j)(y x_k).
/// It is symmetric in x1, x2, x3; at x1 = x2 = x3 = x it equals three times
/// (x^2 y)x - x^2(yx).
template <FieldScalar S>
Vec<S> linearized_jordan(const JordanAlgebra<S>& A, std::size_t x1, std::size_t x2, std::size_t x3, std::size_t y) {
  Vec<S> acc = zero_vec<S>(A.field(), A.dim());
  const std::size_t xs[3] = {x1, x2, x3};
  const S one = A.scalar(1), minus_one = A.scalar(-1);
  for (int lone = 0; lone < 3; ++lone) {
    std::size_t i = xs[(lone + 1) % 3], j = xs[(lone + 2) % 3], k = xs[lone];
    const SparseVec<S>& xij = A.product(i, j);
    SparseVec<S> xij_y = detail::mul_sparse_basis<S>(A, xij, y);
    detail::accumulate_basis_product<S>(A, xij_y, k, one, acc);
    const SparseVec<S>& y_xk = A.product(y, k);
    for (const auto& t : y_xk) detail::accumulate_basis_product<S>(A, xij, t.index, minus_one * t.coeff, acc);
  }
  return acc;
}

namespace detail {

template <FieldScalar S>
bool check_unit(const JordanAlgebra<S>& A, ValidationReport& rep) {
  if (!A.has_unit()) return true;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Element<S> b = A.basis(i);
    if (A.mul(*A.unit(), b) != b) {
      rep.valid = false;
      rep.violation_kind = "unit";
      rep.tuple = {i};
      rep.witness = {A.format(*A.unit()), A.format(b), A.format(A.mul(*A.unit(), b))};
      rep.message = "declared unit does not fix basis vector " + A.labels()[i];
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Checks that the table defines a Jordan algebra (commutativity is
/// structural). Over F_p with p^dim <= budget every element a is tested for
/// [L_{a^2}, L_a] = 0, which is the identity (a^2 b)a = a^2(ba) for all b.
/// Otherwise the linearized identity is checked on all basis quadruples,
/// which is sound for characteristic 0 and p >= 5 only.
template <FieldScalar S>
ValidationReport validate_jordan(const JordanAlgebra<S>& A, std::uint64_t budget = kDefaultBudget) {
  ValidationReport rep;
  if (!detail::check_unit(A, rep)) return rep;
  const FieldDesc& f = A.field();
  const std::size_t n = A.dim();

  if constexpr (std::is_same_v<S, ModP>) {
    const std::uint64_t size = checked_pow(f.p, n);
    if (size <= budget) {
      rep.method = ValidationReport::Method::Exhaustive;
      std::vector<ModP> coords(n);
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        decode_index(idx, f.p, coords);
        Element<S> a(coords);
        Matrix<S> la = A.left_op(a);
        Matrix<S> la2 = A.left_op(A.square(a));
        Matrix<S> comm = la2 * la - la * la2;
        ++rep.checked;
        if (comm.is_zero_matrix()) continue;
        for (std::size_t c = 0; c < n; ++c) {
          Vec<S> col = comm.column(c);
          if (is_zero_vec<S>(col)) continue;
          rep.valid = false;
          rep.violation_kind = "jordan";
          rep.tuple = {c};
          rep.witness = {A.format(a), A.format(A.basis(c)), A.format(Element<S>(col))};
          rep.message = "(a^2 b)a != a^2 (ba)";
          return rep;
        }
      }
      return rep;
    }
    if (f.p == 3)
      throw Error(ErrorCode::CharThreeNeedsExhaustive,
                  "F_3 algebra of dimension " + std::to_string(n) + " exceeds the exhaustive budget");
  }

  rep.method = ValidationReport::Method::Linearized;
  // The expression is symmetric in x1, x2, x3, so sorted triples cover every
  // ordered quadruple.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        for (std::size_t y = 0; y < n; ++y) {
          Vec<S> r = linearized_jordan(A, i, j, k, y);
          if (is_zero_vec<S>(r)) continue;
          rep.valid = false;
          rep.violation_kind = "jordan";
          rep.tuple = {i, j, k, y};
          rep.witness = {A.format(A.basis(i)), A.format(A.basis(j)), A.format(A.basis(k)), A.format(A.basis(y)),
                         A.format(Element<S>(r))};
          rep.message = "linearized Jordan identity fails";
          return rep;
        }
  rep.checked = static_cast<std::uint64_t>(n) * n * n * n;
  return rep;
}

}  // namespace jordan
