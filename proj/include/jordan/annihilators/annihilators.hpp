#pragma once

#include "jordan/algebra/constructions.hpp"
#include "jordan/annihilators/finite_model.hpp"
#include "jordan/annihilators/quadratic_solver.hpp"
#include "jordan/annihilators/verdict.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace jordan {

/// True when the element space can be enumerated under `opt`. Throws when
/// exhaustive mode is forced but unavailable.
template <FieldScalar S>
bool exhaustive_mode(const JordanAlgebra<S>& A, const CheckOptions& opt) {
  if (opt.mode == Mode::Symbolic) return false;
  if constexpr (std::is_same_v<S, ModP>) {
    const std::uint64_t size = checked_pow(A.field().p, A.dim());
    if (size <= opt.budget) return true;
    if (opt.mode == Mode::Exhaustive)
      throw Error(ErrorCode::TooLarge, std::to_string(A.field().p) + "^" + std::to_string(A.dim()) +
                                           " elements exceed budget " + std::to_string(opt.budget));
    return false;
  } else {
    if (opt.mode == Mode::Exhaustive) throw Error(ErrorCode::InvalidField, "exhaustive mode needs a prime field");
    return false;
  }
}

/// Lexicographic order on coordinates (residues by value, rationals by size).
template <FieldScalar S>
bool coords_less(const Element<S>& a, const Element<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if constexpr (std::is_same_v<S, ModP>)
      return a[i].value() < b[i].value();
    else
      return a[i] < b[i];
  }
  return false;
}

template <FieldScalar S>
void sort_unique(std::vector<Element<S>>& v) {
  std::sort(v.begin(), v.end(), coords_less<S>);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline std::vector<Element<ModP>> enumerate_elements(const JordanAlgebra<ModP>& A,
                                                     std::uint64_t budget = kDefaultBudget) {
  if (!A.field().is_prime_field()) throw Error(ErrorCode::InvalidField, "enumeration needs a prime field");
  const std::uint64_t size = checked_pow(A.field().p, A.dim());
  if (size > budget)
    throw Error(ErrorCode::TooLarge, std::to_string(A.field().p) + "^" + std::to_string(A.dim()) +
                                         " elements exceed budget " + std::to_string(budget));
  std::vector<Element<ModP>> out;
  out.reserve(size);
  Vec<ModP> v(A.dim());
  for (std::uint64_t i = 0; i < size; ++i) {
    decode_index(i, A.field().p, v);
    out.emplace_back(v);
  }
  return out;
}

template <FieldScalar S>
struct SquaresSet {
  enum class Kind { Exhaustive, Symbolic };
  Kind kind = Kind::Symbolic;
  std::vector<Element<S>> elements;  // exhaustive: every square, in coordinate order
  Subspace<S> span;                  // always: the linear span of the squares
};

template <FieldScalar S>
SquaresSet<S> squares_set(const JordanAlgebra<S>& A, const CheckOptions& opt = {}) {
  SquaresSet<S> out{SquaresSet<S>::Kind::Symbolic, {}, squares_span(A)};
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) {
      FiniteModel M(A, opt.budget, opt.threads);
      out.kind = SquaresSet<S>::Kind::Exhaustive;
      for (auto idx : M.squares()) out.elements.push_back(M.element(idx));
    }
  } else {
    exhaustive_mode(A, opt);
  }
  return out;
}

/// Coordinate vectors with entries in {-1, 0, 1} (or basis sums when that is
/// too many), used to hunt for witnesses in symbolic mode.
template <FieldScalar S>
std::vector<Element<S>> candidate_elements(const JordanAlgebra<S>& A, std::uint64_t limit = 20000) {
  const std::size_t n = A.dim();
  std::vector<Element<S>> out;
  if (checked_pow(3, n) <= limit) {
    const std::uint64_t total = checked_pow(3, n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Vec<S> v = zero_vec<S>(A.field(), n);
      std::uint64_t r = idx;
      for (std::size_t i = n; i-- > 0;) {
        v[i] = A.scalar(static_cast<std::int64_t>(r % 3) == 2 ? -1 : static_cast<std::int64_t>(r % 3));
        r /= 3;
      }
      out.emplace_back(std::move(v));
    }
    return out;
  }
  out.push_back(A.zero());
  for (std::size_t i = 0; i < n; ++i) out.push_back(A.basis(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(A.basis(i) + A.basis(j));
      out.push_back(A.basis(i) - A.basis(j));
    }
  return out;
}

/// Equations b^2 = target in the coordinates of b.
template <FieldScalar S>
std::vector<QuadPoly<S>> square_equations(const JordanAlgebra<S>& A, const Vec<S>& target) {
  return quadratic_form_equations(
      A, [&](std::size_t j, std::size_t k) { return A.mul(A.basis(j), A.basis(k)); }, target);
}

/// b with b^2 = v.
template <FieldScalar S>
Verdict<S> has_square_root(const JordanAlgebra<S>& A, const Element<S>& v, const CheckOptions& opt = {}) {
  A.check(v);
  if (v.is_zero()) return Verdict<S>{Outcome::Holds, Witness<S>{"square-root", {A.zero(), v}, {}, ""}, {}, "trivial"};
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) {
      FiniteModel M(A, opt.budget, opt.threads);
      const std::uint64_t target = M.index(v);
      if (M.is_square(target))
        for (std::uint64_t b = 0; b < M.size(); ++b)
          if (M.square_of(b) == target)
            return Verdict<S>{Outcome::Holds, Witness<S>{"square-root", {M.element(b), v}, {}, ""}, {}, "exhaustive"};
      return Verdict<S>{Outcome::Fails, Witness<S>{"no-square-root", {v}, {}, "exhaustive scan"}, {}, "exhaustive"};
    }
  } else {
    exhaustive_mode(A, opt);
  }
  if (!squares_span(A).contains(v.coords()))
    return Verdict<S>{Outcome::Fails, Witness<S>{"no-square-root", {v}, {}, "outside the span of all squares"}, {},
                      "symbolic"};
  auto res = solve_quadratic_system(A.field(), A.dim(), square_equations(A, v.coords()));
  for (const auto& piece : res.pieces) {
    Element<S> b(piece.point);
    if (A.square(b) == v) return Verdict<S>{Outcome::Holds, Witness<S>{"square-root", {b, v}, {}, ""}, {}, "symbolic"};
  }
  if (res.pieces.empty() && res.complete)
    return Verdict<S>{Outcome::Fails, Witness<S>{"no-square-root", {v}, {}, "quadratic system has no solution"}, {},
                      "symbolic"};
  return Verdict<S>::unknown("square-root search inconclusive", "symbolic");
}

/// ⊥S: intersection of ker U_a over a in S (all of A for empty S).
template <FieldScalar S>
Subspace<S> left_annihilator(const JordanAlgebra<S>& A, const std::vector<Element<S>>& set) {
  Subspace<S> out = Subspace<S>::full(A.field(), A.dim());
  for (const auto& a : set) {
    out = intersect(out, kernel(A.u_op(a)));
    if (out.is_zero()) break;
  }
  return out;
}

/// S^⊥ = {a : U_a x = 0 for all x in S}, as element indices of M.
inline std::vector<std::uint32_t> right_annihilator_indices(const FiniteModel& M,
                                                            const std::vector<Element<ModP>>& set) {
  std::vector<bool> class_ok(M.class_count(), true);
  for (std::size_t c = 0; c < M.class_count(); ++c)
    for (const auto& x : set)
      if (!M.class_kernel(c).contains(x.coords())) {
        class_ok[c] = false;
        break;
      }
  std::vector<std::uint32_t> out;
  for (std::uint64_t a = 0; a < M.size(); ++a)
    if (class_ok[M.kernel_class(a)]) out.push_back(static_cast<std::uint32_t>(a));
  return out;
}

inline std::vector<Element<ModP>> right_annihilator(const JordanAlgebra<ModP>& A,
                                                    const std::vector<Element<ModP>>& set,
                                                    const CheckOptions& opt = {}) {
  CheckOptions forced = opt;
  forced.mode = Mode::Exhaustive;
  exhaustive_mode(A, forced);
  FiniteModel M(A, opt.budget, opt.threads);
  std::vector<Element<ModP>> out;
  for (auto idx : right_annihilator_indices(M, set)) out.push_back(M.element(idx));
  return out;
}

/// U_e(A).
template <FieldScalar S>
Subspace<S> inner_ideal(const JordanAlgebra<S>& A, const Element<S>& e) {
  return image(A.u_op(e));
}

template <FieldScalar S>
struct IdempotentList {
  std::vector<Element<S>> elements;  // coordinate order, 0 first
  bool complete = true;
  std::string method;
};

/// Equations e^2 - e = 0.
template <FieldScalar S>
std::vector<QuadPoly<S>> idempotent_equations(const JordanAlgebra<S>& A) {
  auto eqs = square_equations(A, zero_vec<S>(A.field(), A.dim()));
  for (std::size_t m = 0; m < A.dim(); ++m) eqs[m].add_linear(m, A.scalar(-1));
  return eqs;
}

template <FieldScalar S>
IdempotentList<S> idempotents(const JordanAlgebra<S>& A, const CheckOptions& opt = {}) {
  IdempotentList<S> out;
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) {
      FiniteModel M(A, opt.budget, opt.threads);
      for (auto idx : M.idempotents()) out.elements.push_back(M.element(idx));
      out.method = "exhaustive";
      return out;
    }
  } else {
    exhaustive_mode(A, opt);
  }
  out.method = "symbolic";
  auto res = solve_quadratic_system(A.field(), A.dim(), idempotent_equations(A));
  out.complete = res.complete;
  for (const auto& piece : res.pieces) {
    Element<S> e(piece.point);
    if (A.is_idempotent(e)) out.elements.push_back(e);
    // A positive-dimensional family cannot be listed; keep its base point.
    if (!piece.directions.empty()) out.complete = false;
  }
  out.elements.push_back(A.zero());
  if (A.unit()) out.elements.push_back(*A.unit());
  sort_unique(out.elements);
  return out;
}

/// Trivial elements: U_z = 0 and z^2 = 0.
template <FieldScalar S>
struct TrivialElements {
  std::vector<Element<S>> elements;           // exhaustive: all of them; symbolic: piece base points
  std::vector<SolutionPiece<S>> pieces;       // symbolic description
  bool complete = true;
  std::string method;

  /// A nonzero trivial element, if one is known.
  std::optional<Element<S>> nonzero_example() const {
    for (const auto& z : elements)
      if (!z.is_zero()) return z;
    for (const auto& p : pieces)
      if (p.exact)
        for (const auto& d : p.directions) {
          Vec<S> v = p.point;
          for (std::size_t i = 0; i < v.size(); ++i) v[i] += d[i];
          Element<S> z(std::move(v));
          if (!z.is_zero()) return z;
        }
    return std::nullopt;
  }
};

template <FieldScalar S>
bool is_trivial(const JordanAlgebra<S>& A, const Element<S>& z) {
  return A.square(z).is_zero() && A.u_op(z).is_zero_matrix();
}

/// Equations U_z b_i = 0 (all i) and z^2 = 0.
template <FieldScalar S>
std::vector<QuadPoly<S>> trivial_equations(const JordanAlgebra<S>& A) {
  const Vec<S> zero = zero_vec<S>(A.field(), A.dim());
  auto eqs = square_equations(A, zero);
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Element<S> bi = A.basis(i);
    auto u = quadratic_form_equations(
        A,
        [&](std::size_t j, std::size_t k) {
          Element<S> bj = A.basis(j), bk = A.basis(k);
          return A.scalar(2) * A.mul(A.mul(bj, bi), bk) - A.mul(A.mul(bj, bk), bi);
        },
        zero);
    eqs.insert(eqs.end(), u.begin(), u.end());
  }
  return eqs;
}

template <FieldScalar S>
TrivialElements<S> trivial_elements(const JordanAlgebra<S>& A, const CheckOptions& opt = {}) {
  TrivialElements<S> out;
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) {
      FiniteModel M(A, opt.budget, opt.threads);
      out.method = "exhaustive";
      for (std::uint64_t z = 0; z < M.size(); ++z)
        if (M.square_of(z) == 0 && M.class_kernel(M.kernel_class(z)).rank() == A.dim())
          out.elements.push_back(M.element(z));
      return out;
    }
  } else {
    exhaustive_mode(A, opt);
  }
  out.method = "symbolic";
  auto res = solve_quadratic_system(A.field(), A.dim(), trivial_equations(A));
  out.complete = res.complete;
  for (auto& piece : res.pieces) {
    if (!piece.exact) out.complete = false;
    out.elements.emplace_back(piece.point);
    out.pieces.push_back(std::move(piece));
  }
  std::erase_if(out.elements, [&](const Element<S>& z) { return !is_trivial(A, z); });
  out.elements.push_back(A.zero());
  sort_unique(out.elements);
  return out;
}

}  // namespace jordan
