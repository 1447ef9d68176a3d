#pragma once

#include "jordan/annihilators/deciders.hpp"
#include "jordan/radicals/radicals.hpp"

#include <string>

namespace jordan {

struct SweepResult {
  bool ok = true;
  std::size_t checked = 0;
  std::string detail;  // first violation, or a summary
};

/// U_{1-e}(A) n A^2 as a bitset over the squares of M. Without a unit, 1 is
/// the hull's unit and the image is cut back to A.
inline Bitset complement_image_squares(const FiniteModel& M, const Element<ModP>& e) {
  const auto& A = M.algebra();
  if (A.unit()) return M.squares_in(inner_ideal(A, *A.unit() - e));
  const auto H = unital_hull(A);
  const Element<ModP> c = *H.unit() - embed_in_hull(A, e);
  Subspace<ModP> img = inner_ideal(H, c);
  // Keep the part inside A (first hull coordinate zero) and drop that coordinate.
  std::vector<Vec<ModP>> rows;
  Subspace<ModP> inA = intersect(img, Subspace<ModP>::span(H.field(), H.dim(), [&] {
                                   std::vector<Vec<ModP>> r;
                                   for (std::size_t i = 1; i < H.dim(); ++i) r.push_back(H.basis(i).coords());
                                   return r;
                                 }()));
  for (const auto& b : inA.basis()) rows.emplace_back(b.begin() + 1, b.end());
  return M.squares_in(Subspace<ModP>::span(A.field(), A.dim(), std::move(rows)));
}

/// For every idempotent e: ker U_e n A^2 = U_{1-e}(A) n A^2.
inline SweepResult kernel_complement_sweep(const FiniteModel& M) {
  SweepResult r;
  for (auto idx : M.idempotents()) {
    const auto e = M.element(idx);
    ++r.checked;
    if (M.squares_in(left_annihilator(M.algebra(), {e})) != complement_image_squares(M, e)) {
      r.ok = false;
      r.detail = "set equality fails at e = " + M.algebra().format(e);
      return r;
    }
  }
  r.detail = std::to_string(r.checked) + " idempotents";
  return r;
}

/// The idempotent attached to x = 0 by the RJ condition fixes every square,
/// and no b has b^2 nonzero and nilpotent.
inline SweepResult unit_and_root_sweep(const FiniteModel& M, const CheckOptions& opt = {}) {
  SweepResult r;
  const auto& A = M.algebra();
  auto rj = rj_check(M, opt);
  if (rj.outcome() != Outcome::Holds) {
    r.ok = false;
    r.detail = "RJ does not hold";
    return r;
  }
  const Element<ModP> u = rj.idempotent_map.front().second;
  for (auto s : M.squares()) {
    const auto a = M.element(s);
    ++r.checked;
    if (!(A.mul(u, a) == a)) {
      r.ok = false;
      r.detail = A.format(u) + " does not fix the square " + A.format(a);
      return r;
    }
  }
  auto nr = nilpotent_root_check(M, opt);
  if (nr.outcome() != Outcome::Holds) {
    r.ok = false;
    r.detail = "nilpotent element with a square root found";
    return r;
  }
  r.detail = std::to_string(r.checked) + " squares fixed by " + A.format(u) + "; no nilpotent square roots";
  return r;
}

/// U_e(A) = U_f(A) forces e = f over all idempotent pairs.
inline SweepResult idempotent_uniqueness_sweep(const FiniteModel& M) {
  SweepResult r;
  const auto& A = M.algebra();
  std::vector<Subspace<ModP>> images;
  for (auto idx : M.idempotents()) images.push_back(inner_ideal(A, M.element(idx)));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      ++r.checked;
      if (images[i] == images[j]) {
        r.ok = false;
        r.detail = "U_e(A) = U_f(A) for distinct e = " + A.format(M.element(M.idempotents()[i])) +
                   ", f = " + A.format(M.element(M.idempotents()[j]));
        return r;
      }
    }
  r.detail = std::to_string(r.checked) + " pairs";
  return r;
}

/// Deg(A) n A^2 = {0}.
inline SweepResult deg_meets_squares_trivially(const FiniteModel& M, const CheckOptions& opt = {}) {
  SweepResult r;
  auto D = deg_radical(M.algebra(), opt);
  auto bits = M.squares_in(D.subspace);
  r.checked = M.squares().size();
  if (bits.count() != 1) {
    r.ok = false;
    r.detail = std::to_string(bits.count() - 1) + " nonzero squares lie in Deg(A)";
    return r;
  }
  r.detail = "Deg(A) of dimension " + std::to_string(D.subspace.rank()) + " holds no nonzero square";
  return r;
}

}  // namespace jordan
