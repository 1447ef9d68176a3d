#pragma once

// Exhaustive reference computations for small F_p algebras. Everything here is
// done on explicit element lists using only mul/square/u of the algebra.

#include "jordan/algebra/algebra.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <vector>

namespace jordan::testing {

using Set = std::set<std::size_t>;

// Straight from the definitions: element lists, U applied pointwise, sets
// compared as sets. Shares nothing with the deciders except mul.
struct Brute {
  const JordanAlgebra<ModP>& A;
  std::vector<Element<ModP>> el;
  Set squares, idem;

  explicit Brute(const JordanAlgebra<ModP>& a) : A(a) {
    const auto p = A.field().p;
    std::size_t total = 1;
    for (std::size_t i = 0; i < A.dim(); ++i) total *= p;
    for (std::size_t c = 0; c < total; ++c) {
      std::vector<std::int64_t> x(A.dim());
      for (std::size_t i = A.dim(), r = c; i-- > 0; r /= p) x[i] = static_cast<std::int64_t>(r % p);
      el.push_back(A.element(x));
    }
    for (std::size_t i = 0; i < el.size(); ++i) {
      squares.insert(find(A.square(el[i])));
      if (A.square(el[i]) == el[i]) idem.insert(i);
    }
  }
  std::size_t find(const Element<ModP>& x) const {
    for (std::size_t i = 0; i < el.size(); ++i)
      if (el[i] == x) return i;
    return el.size();
  }
  Set image_of_u(std::size_t e) const {
    Set out;
    for (const auto& y : el) out.insert(find(A.u(el[e], y)));
    return out;
  }
  Set meet_squares(const Set& s) const {
    Set out;
    for (auto i : s)
      if (squares.count(i)) out.insert(i);
    return out;
  }
  Set left(std::size_t x) const {  // ker U_x
    Set out;
    for (std::size_t y = 0; y < el.size(); ++y)
      if (A.u(el[x], el[y]).is_zero()) out.insert(y);
    return out;
  }
  Set right(std::size_t x) const {  // {a : U_a x = 0}
    Set out;
    for (std::size_t a = 0; a < el.size(); ++a)
      if (A.u(el[a], el[x]).is_zero()) out.insert(a);
    return out;
  }
  bool matches_rj(const Set& s) const {
    for (auto e : idem)
      if (meet_squares(s) == meet_squares(image_of_u(e))) return true;
    return false;
  }
  bool matches_rickart(const Set& s) const {
    for (auto e : idem)
      if (s == image_of_u(e)) return true;
    return false;
  }
  static std::set<Set> closure(std::set<Set> gens) {
    std::set<Set> all = gens;
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Set> cur(all.begin(), all.end());
      for (const auto& a : cur)
        for (const auto& g : gens) {
          Set m;
          std::set_intersection(a.begin(), a.end(), g.begin(), g.end(), std::inserter(m, m.end()));
          grew = all.insert(m).second || grew;
        }
    }
    return all;
  }
  bool rj() const {
    for (std::size_t x = 0; x < el.size(); ++x)
      if (!matches_rj(left(x))) return false;
    return true;
  }
  bool bj() const {
    std::set<Set> gens;
    for (std::size_t x = 0; x < el.size(); ++x) gens.insert(meet_squares(left(x)));
    for (const auto& s : closure(gens))
      if (!matches_rj(s)) return false;
    return true;
  }
  bool rickart() const {
    for (auto x : squares)
      if (!matches_rickart(right(x))) return false;
    return true;
  }
  bool baer() const {
    std::set<Set> gens;
    for (auto x : squares) gens.insert(right(x));
    for (const auto& s : closure(gens))
      if (!matches_rickart(s)) return false;
    return true;
  }
  bool nondeg() const {
    for (std::size_t z = 1; z < el.size(); ++z)
      if (A.u_op(el[z]).is_zero_matrix()) return false;
    return true;
  }
  bool quad_nondeg() const {
    for (const auto& b : el) {
      auto s = A.square(b);
      if (!s.is_zero() && A.u_op(s).is_zero_matrix()) return false;
    }
    return true;
  }
  bool no_nil_root() const {
    for (const auto& b : el) {
      auto s = A.square(b);
      if (s.is_zero()) continue;
      auto t = s;
      for (std::size_t k = 0; k <= A.dim() + 1; ++k) t = A.mul(t, s);
      if (t.is_zero()) return false;
    }
    return true;
  }
  // ---- subspaces and ideals, as element sets ----

  Set span(const std::vector<std::size_t>& gens) const {
    Set out{find(A.zero())};
    for (auto g : gens) {
      Set next = out;
      for (auto v : out)
        for (std::uint32_t c = 1; c < A.field().p; ++c) next.insert(find(el[v] + A.scalar(c) * el[g]));
      out = std::move(next);
    }
    return out;
  }
  std::vector<Set> subspaces() const {
    std::set<Set> seen{span({})};
    std::vector<Set> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
      Set V = todo.back();
      todo.pop_back();
      std::vector<std::size_t> gens;
      for (std::size_t x = 0; x < el.size(); ++x) {
        if (V.count(x)) continue;
        Set W = V;
        // V + span(x)
        for (auto v : V)
          for (std::uint32_t c = 1; c < A.field().p; ++c) W.insert(find(el[v] + A.scalar(c) * el[x]));
        if (seen.insert(W).second) todo.push_back(W);
      }
    }
    return {seen.begin(), seen.end()};
  }
  bool is_ideal(const Set& I) const {
    for (auto x : I)
      for (std::size_t i = 0; i < A.dim(); ++i)
        if (!I.count(find(A.mul(el[x], A.basis(i))))) return false;
    return true;
  }
  std::vector<Set> ideals() const {
    std::vector<Set> out;
    for (auto& V : subspaces())
      if (is_ideal(V)) out.push_back(V);
    return out;
  }
  bool nilpotent(std::size_t x) const {
    auto t = el[x];
    for (std::size_t k = 0; k <= A.dim() + 1; ++k) t = A.mul(t, el[x]);
    return t.is_zero();
  }
  // y -> U_{1-z} y, computed on A so it also makes sense without a unit
  bool quasi_invertible(std::size_t z) const {
    Set hit;
    for (const auto& y : el) hit.insert(find(y - A.scalar(2) * A.mul(el[z], y) + A.u(el[z], y)));
    return hit.size() == el.size();
  }
  // A/I has no nonzero z with U_z A = 0
  bool quotient_nondegenerate(const Set& I) const {
    for (std::size_t z = 0; z < el.size(); ++z) {
      if (I.count(z)) continue;
      bool trivial = true;
      for (const auto& y : el)
        if (!I.count(find(A.u(el[z], y)))) {
          trivial = false;
          break;
        }
      if (trivial) return false;
    }
    return true;
  }
  Set deg() const {
    Set out;
    for (std::size_t x = 0; x < el.size(); ++x) out.insert(x);
    for (auto& I : ideals())
      if (quotient_nondegenerate(I)) {
        Set m;
        std::set_intersection(out.begin(), out.end(), I.begin(), I.end(), std::inserter(m, m.end()));
        out = std::move(m);
      }
    return out;
  }
  template <class Good>
  Set largest_ideal(Good&& good) const {
    Set best = span({});
    for (auto& I : ideals())
      if (std::all_of(I.begin(), I.end(), good) && I.size() > best.size()) best = I;
    return best;
  }
  Set nil() const {
    return largest_ideal([&](std::size_t x) { return nilpotent(x); });
  }
  Set rad() const {
    return largest_ideal([&](std::size_t x) { return quasi_invertible(x); });
  }
  Set members(const Subspace<ModP>& V) const {
    Set out;
    for (std::size_t x = 0; x < el.size(); ++x)
      if (V.contains(el[x].coords())) out.insert(x);
    return out;
  }
};

}  // namespace jordan::testing
