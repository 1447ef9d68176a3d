#pragma once

#include "jordan/annihilators/deciders.hpp"
#include "jordan/radicals/lattice.hpp"

#include <set>
#include <string>

namespace jordan {

struct WitnessCheck {
  bool ok = false;
  std::string message;
};

namespace detail {

inline WitnessCheck reject(std::string m) { return {false, std::move(m)}; }
inline WitnessCheck accept(std::string m) { return {true, std::move(m)}; }

inline Bitset left_class_squares(const FiniteModel& M, const std::vector<Element<ModP>>& S) {
  return M.squares_in(left_annihilator(M.algebra(), S));
}

/// Does some idempotent e satisfy U_e(A) n A^2 == squares?
inline std::optional<std::uint32_t> idempotent_for_squares(const FiniteModel& M, const Bitset& squares) {
  for (auto e : M.idempotents())
    if (M.squares_in(inner_ideal(M.algebra(), M.element(e))) == squares) return e;
  return std::nullopt;
}

inline std::optional<std::uint32_t> idempotent_for_set(const FiniteModel& M, const std::vector<std::uint32_t>& set) {
  for (auto e : M.idempotents())
    if (M.elements_of(inner_ideal(M.algebra(), M.element(e))) == set) return e;
  return std::nullopt;
}

template <FieldScalar S>
WitnessCheck check_square_pair(const JordanAlgebra<S>& A, const Witness<S>& w, bool trivial) {
  if (w.elements.size() != 2) return reject("expected the pair (b, b^2)");
  const auto& b = w.elements[0];
  const auto& s = w.elements[1];
  if (!(A.square(b) == s)) return reject("second element is not the square of the first");
  if (s.is_zero()) return reject("b^2 is zero");
  if (trivial) {
    if (!is_trivial(A, s)) return reject("b^2 is not trivial");
    return accept("b^2 = " + A.format(s) + " is nonzero and trivial");
  }
  if (!A.is_nilpotent(s)) return reject("b^2 is not nilpotent");
  return accept("b^2 = " + A.format(s) + " is nonzero and nilpotent");
}

}  // namespace detail

/// Re-checks a Fails witness from scratch. Kinds "nilpotent-square-root",
/// "trivial-square" and "trivial" are checked over any field; annihilator and
/// lattice kinds need the finite model.
template <FieldScalar S>
WitnessCheck verify_witness(const JordanAlgebra<S>& A, Property prop, const Witness<S>& w,
                            const CheckOptions& opt = {}) {
  for (const auto& e : w.elements)
    if (e.size() != A.dim()) return detail::reject("witness element has wrong dimension");
  if (w.kind == "nilpotent-square-root") {
    if (prop == Property::QuadraticNondegenerate || prop == Property::Nondegenerate)
      return detail::reject("a nilpotent square root does not refute " + to_string(prop));
    return detail::check_square_pair(A, w, false);
  }
  // A nonzero trivial b^2 refutes every property we decide (it is nilpotent too).
  if (w.kind == "trivial-square") return detail::check_square_pair(A, w, true);
  if (w.kind == "trivial") {
    if (w.elements.size() != 1) return detail::reject("expected one element");
    if (w.elements[0].is_zero()) return detail::reject("element is zero");
    if (!is_trivial(A, w.elements[0])) return detail::reject("element is not trivial");
    return detail::accept(A.format(w.elements[0]) + " is a nonzero trivial element");
  }
  if constexpr (std::is_same_v<S, ModP>) {
    CheckOptions forced = opt;
    forced.mode = Mode::Exhaustive;
    exhaustive_mode(A, forced);
    FiniteModel M(A, opt.budget, opt.threads);
    if (w.kind == "element" || w.kind == "subset") {
      if (w.kind == "element" && w.elements.size() != 1) return detail::reject("expected one element");
      if (prop == Property::RickartJordan || prop == Property::BaerJordan) {
        for (const auto& x : w.elements)
          if (!M.is_square(M.index(x))) return detail::reject(A.format(x) + " is not a square");
        auto R = right_annihilator_indices(M, w.elements);
        if (auto e = detail::idempotent_for_set(M, R))
          return detail::reject("S^⊥ = U_e(A) for e = " + A.format(M.element(*e)));
        return detail::accept("no idempotent e has U_e(A) equal to S^⊥ (" + std::to_string(R.size()) + " elements)");
      }
      auto sq = detail::left_class_squares(M, w.elements);
      if (auto e = detail::idempotent_for_squares(M, sq))
        return detail::reject("⊥S n A^2 = U_e(A) n A^2 for e = " + A.format(M.element(*e)));
      return detail::accept("no idempotent e has U_e(A) n A^2 equal to ⊥S n A^2");
    }
    if (w.kind == "lattice") {
      std::vector<Element<ModP>> all;
      for (auto idx : M.idempotents()) all.push_back(M.element(idx));
      std::vector<std::size_t> pos;
      for (const auto& x : w.elements) {
        if (!A.is_idempotent(x)) return detail::reject(A.format(x) + " is not idempotent");
        pos.push_back(static_cast<std::size_t>(std::find(all.begin(), all.end(), x) - all.begin()));
      }
      auto L = lattice_from(A, all, true);
      auto le = [&](std::size_t a, std::size_t b) { return L.le(a, b); };
      std::vector<std::size_t> up, down;
      for (std::size_t k = 0; k < all.size(); ++k) {
        bool u = true, d = true;
        for (auto i : pos) {
          u = u && L.le(i, k);
          d = d && L.le(k, i);
        }
        if (u) up.push_back(k);
        if (d) down.push_back(k);
      }
      const bool sup = detail::least_of(up, le).has_value();
      const bool inf = detail::least_of(down, [&](std::size_t a, std::size_t b) { return L.le(b, a); }).has_value();
      if (sup && inf) return detail::reject("the subset has both a sup and an inf");
      return detail::accept(std::string("the subset of idempotents has no ") + (sup ? "inf" : "sup"));
    }
  }
  return detail::reject("witness kind '" + w.kind + "' cannot be verified for this algebra");
}

/// Re-checks every (x, e) pair of a Holds map.
template <FieldScalar S>
WitnessCheck verify_idempotent_map(const JordanAlgebra<S>& A, Property prop,
                                   const std::vector<std::pair<Element<S>, Element<S>>>& map,
                                   const CheckOptions& opt = {}) {
  for (const auto& [x, e] : map) {
    if (x.size() != A.dim() || e.size() != A.dim()) return detail::reject("map entry has wrong dimension");
    if (!A.is_idempotent(e)) return detail::reject(A.format(e) + " is not idempotent");
  }
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) {
      FiniteModel M(A, opt.budget, opt.threads);
      for (const auto& [x, e] : map) {
        if (prop == Property::RickartJordan) {
          if (!M.is_square(M.index(x))) return detail::reject(A.format(x) + " is not a square");
          if (right_annihilator_indices(M, {x}) != M.elements_of(inner_ideal(A, e)))
            return detail::reject("{x}^⊥ differs from U_e(A) at x = " + A.format(x));
        } else if (M.squares_in(left_annihilator(A, {x})) != M.squares_in(inner_ideal(A, e))) {
          return detail::reject("⊥{x} n A^2 differs from U_e(A) n A^2 at x = " + A.format(x));
        }
      }
      return detail::accept(std::to_string(map.size()) + " map entries re-checked exhaustively");
    }
  }
  if (prop == Property::RickartJordan) return detail::reject("Rickart maps need exhaustive mode");
  const Subspace<S> SS = squares_span(A);
  for (const auto& [x, e] : map)
    if (!(intersect(left_annihilator(A, {x}), SS) == intersect(inner_ideal(A, e), SS)))
      return detail::reject("subspaces differ inside span(A^2) at x = " + A.format(x));
  return detail::accept(std::to_string(map.size()) + " map entries re-checked inside span(A^2)");
}

}  // namespace jordan
