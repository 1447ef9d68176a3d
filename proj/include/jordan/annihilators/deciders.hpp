#pragma once

#include "jordan/annihilators/annihilators.hpp"

#include <map>
#include <unordered_map>

namespace jordan {

/// U_e(A) n A^2 for every idempotent e of M, with the smallest e per set.
struct IdempotentSquareSets {
  std::vector<std::uint32_t> idempotents;  // element indices, ascending
  std::vector<Bitset> image_squares;       // parallel to idempotents
  std::unordered_map<Bitset, std::size_t, BitsetHash> first;

  std::optional<std::uint32_t> match(const Bitset& squares) const {
    auto it = first.find(squares);
    if (it == first.end()) return std::nullopt;
    return idempotents[it->second];
  }
};

inline IdempotentSquareSets idempotent_square_sets(const FiniteModel& M) {
  IdempotentSquareSets out;
  out.idempotents = M.idempotents();
  for (auto e : out.idempotents) {
    Bitset b = M.squares_in(image(M.u_op(e)));
    out.first.try_emplace(b, out.image_squares.size());
    out.image_squares.push_back(std::move(b));
  }
  return out;
}

/// Per kernel class, the smallest idempotent e with ker U_x n A^2 = U_e(A) n A^2.
struct RJTable {
  std::vector<std::optional<std::uint32_t>> class_idempotent;
  std::optional<std::size_t> failing_class;  // smallest, so its representative is the first failing x
};

inline RJTable rj_table(const FiniteModel& M, const IdempotentSquareSets& I) {
  RJTable t;
  t.class_idempotent.resize(M.class_count());
  for (std::size_t c = 0; c < M.class_count(); ++c) {
    t.class_idempotent[c] = I.match(M.class_squares(c));
    if (!t.class_idempotent[c] && !t.failing_class) t.failing_class = c;
  }
  return t;
}

namespace detail {

template <FieldScalar S>
ClassReport<S> report_base(Property p, const FieldDesc& f, const CheckOptions& opt, Mode ran) {
  ClassReport<S> rep;
  rep.property = p;
  rep.field = f;
  rep.mode = ran;
  rep.budget = opt.budget;
  return rep;
}

inline std::vector<Element<ModP>> elements_at(const FiniteModel& M, const std::vector<std::uint32_t>& idx) {
  std::vector<Element<ModP>> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(M.element(i));
  return out;
}

/// Closure of `gens` under intersection (bitwise and), breadth first. Each set
/// remembers the generator representatives whose intersection produced it.
/// Returns the first set for which `accept` is false.
struct ClosureResult {
  std::size_t size = 0;
  std::optional<std::vector<std::uint32_t>> rejected;  // representatives of the failing subset
};

template <class Accept>
ClosureResult intersection_closure(const std::vector<std::pair<Bitset, std::uint32_t>>& gens, Accept&& accept) {
  ClosureResult res;
  std::vector<Bitset> sets;
  std::vector<std::vector<std::uint32_t>> prov;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  auto add = [&](Bitset b, std::vector<std::uint32_t> p) {
    if (seen.count(b)) return true;
    if (!accept(b)) {
      res.rejected = std::move(p);
      return false;
    }
    seen.emplace(b, sets.size());
    sets.push_back(std::move(b));
    prov.push_back(std::move(p));
    return true;
  };
  for (const auto& [b, rep] : gens)
    if (!add(b, {rep})) return res;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (const auto& [g, rep] : gens) {
      Bitset next = sets[i] & g;
      if (seen.count(next)) continue;
      auto p = prov[i];
      p.push_back(rep);
      if (!add(std::move(next), std::move(p))) {
        res.size = sets.size();
        return res;
      }
    }
  res.size = sets.size();
  return res;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive deciders over a finite model.

inline ClassReport<ModP> rj_check(const FiniteModel& M, const CheckOptions& opt = {}) {
  auto rep = detail::report_base<ModP>(Property::RJ, M.algebra().field(), opt, Mode::Exhaustive);
  const auto I = idempotent_square_sets(M);
  const auto T = rj_table(M, I);
  if (T.failing_class) {
    Element<ModP> x = M.element(M.class_representative(*T.failing_class));
    rep.verdict = Verdict<ModP>::fails(
        {"element", {x}, std::nullopt, "no idempotent e with ker U_x n A^2 = U_e(A) n A^2"}, "exhaustive");
    return rep;
  }
  rep.verdict = Verdict<ModP>::holds("exhaustive");
  if (M.size() <= opt.map_limit) {
    for (std::uint64_t x = 0; x < M.size(); ++x)
      rep.idempotent_map.emplace_back(M.element(x), M.element(*T.class_idempotent[M.kernel_class(x)]));
  } else {
    for (std::size_t c = 0; c < M.class_count(); ++c)
      rep.idempotent_map.emplace_back(M.element(M.class_representative(c)), M.element(*T.class_idempotent[c]));
    rep.notes.push_back("map lists one representative per kernel class (" + std::to_string(M.class_count()) +
                        " classes); every x with the same ker U_x shares its idempotent");
  }
  return rep;
}

inline ClassReport<ModP> bj_check_direct(const FiniteModel& M, const CheckOptions& opt = {}) {
  auto rep = detail::report_base<ModP>(Property::BJ, M.algebra().field(), opt, Mode::Exhaustive);
  const auto I = idempotent_square_sets(M);
  const auto T = rj_table(M, I);
  if (T.failing_class) {
    Element<ModP> x = M.element(M.class_representative(*T.failing_class));
    rep.verdict = Verdict<ModP>::fails({"subset", {x}, std::nullopt, "singleton subset already fails"}, "exhaustive");
    return rep;
  }
  std::vector<std::pair<Bitset, std::uint32_t>> gens;
  std::unordered_map<Bitset, bool, BitsetHash> distinct;
  for (std::size_t c = 0; c < M.class_count(); ++c)
    if (distinct.emplace(M.class_squares(c), true).second) gens.emplace_back(M.class_squares(c), M.class_representative(c));
  auto res = detail::intersection_closure(gens, [&](const Bitset& b) { return I.match(b).has_value(); });
  if (res.rejected) {
    rep.verdict = Verdict<ModP>::fails(
        {"subset", detail::elements_at(M, *res.rejected), std::nullopt, "no idempotent matches ⊥S n A^2"},
        "exhaustive-closure");
    return rep;
  }
  rep.verdict = Verdict<ModP>::holds("exhaustive-closure");
  rep.notes.push_back("closure of annihilator sets has " + std::to_string(res.size) + " members");
  return rep;
}

/// For each idempotent e whose U_e(A) is a union of kernel classes, that set
/// of classes; the smallest e is kept per set.
inline std::unordered_map<Bitset, std::uint32_t, BitsetHash> idempotent_class_sets(const FiniteModel& M) {
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> out;
  for (auto e : M.idempotents()) {
    std::map<std::uint32_t, std::uint64_t> hits;
    for (auto idx : M.elements_of(image(M.u_op(e)))) ++hits[M.kernel_class(idx)];
    Bitset classes(M.class_count());
    bool whole = true;
    for (const auto& [c, n] : hits) {
      if (n != M.class_size(c)) {
        whole = false;
        break;
      }
      classes.set(c);
    }
    if (whole) out.try_emplace(std::move(classes), e);
  }
  return out;
}

/// {x}^⊥ for a square x, as a set of kernel classes.
inline Bitset right_annihilator_classes(const FiniteModel& M, std::uint32_t square_position) {
  Bitset out(M.class_count());
  for (std::size_t c = 0; c < M.class_count(); ++c)
    if (M.class_squares(c).test(square_position)) out.set(c);
  return out;
}

inline ClassReport<ModP> rickart_check(const FiniteModel& M, const CheckOptions& opt = {}) {
  auto rep = detail::report_base<ModP>(Property::RickartJordan, M.algebra().field(), opt, Mode::Exhaustive);
  const auto E = idempotent_class_sets(M);
  for (std::size_t s = 0; s < M.squares().size(); ++s) {
    Bitset r = right_annihilator_classes(M, static_cast<std::uint32_t>(s));
    auto it = E.find(r);
    if (it == E.end()) {
      rep.verdict = Verdict<ModP>::fails(
          {"element", {M.element(M.squares()[s])}, std::nullopt, "no idempotent e with {x}^⊥ = U_e(A)"}, "exhaustive");
      return rep;
    }
    rep.idempotent_map.emplace_back(M.element(M.squares()[s]), M.element(it->second));
  }
  rep.verdict = Verdict<ModP>::holds("exhaustive");
  return rep;
}

inline ClassReport<ModP> baer_check(const FiniteModel& M, const CheckOptions& opt = {}) {
  auto rep = detail::report_base<ModP>(Property::BaerJordan, M.algebra().field(), opt, Mode::Exhaustive);
  const auto E = idempotent_class_sets(M);
  std::vector<std::pair<Bitset, std::uint32_t>> gens;
  std::unordered_map<Bitset, bool, BitsetHash> distinct;
  for (std::size_t s = 0; s < M.squares().size(); ++s) {
    Bitset r = right_annihilator_classes(M, static_cast<std::uint32_t>(s));
    if (distinct.emplace(r, true).second) gens.emplace_back(std::move(r), M.squares()[s]);
  }
  auto res = detail::intersection_closure(gens, [&](const Bitset& b) { return E.count(b) > 0; });
  if (res.rejected) {
    rep.verdict = Verdict<ModP>::fails(
        {"subset", detail::elements_at(M, *res.rejected), std::nullopt, "no idempotent e with S^⊥ = U_e(A)"},
        "exhaustive-closure");
    return rep;
  }
  rep.verdict = Verdict<ModP>::holds("exhaustive-closure");
  rep.notes.push_back("closure of right annihilators has " + std::to_string(res.size) + " members");
  return rep;
}

inline bool is_trivial_index(const FiniteModel& M, std::uint64_t z) {
  return M.square_of(z) == 0 && M.class_kernel(M.kernel_class(z)).rank() == M.dim();
}

inline ClassReport<ModP> nondeg_check(const FiniteModel& M, const CheckOptions& opt = {}) {
  auto rep = detail::report_base<ModP>(Property::Nondegenerate, M.algebra().field(), opt, Mode::Exhaustive);
  for (std::uint64_t z = 1; z < M.size(); ++z)
    if (is_trivial_index(M, z)) {
      rep.verdict = Verdict<ModP>::fails({"trivial", {M.element(z)}, std::nullopt, "U_z = 0 and z^2 = 0"}, "exhaustive");
      return rep;
    }
  rep.verdict = Verdict<ModP>::holds("exhaustive");
  return rep;
}

inline ClassReport<ModP> quad_nondeg_check(const FiniteModel& M, const CheckOptions& opt = {}) {
  auto rep = detail::report_base<ModP>(Property::QuadraticNondegenerate, M.algebra().field(), opt, Mode::Exhaustive);
  std::vector<char> trivial_square(M.squares().size(), 0);
  bool any = false;
  for (std::size_t s = 0; s < M.squares().size(); ++s)
    if (M.squares()[s] != 0 && is_trivial_index(M, M.squares()[s])) {
      trivial_square[s] = 1;
      any = true;
    }
  if (any)
    for (std::uint64_t b = 0; b < M.size(); ++b)
      if (trivial_square[static_cast<std::size_t>(M.square_pos(M.square_of(b)))]) {
        rep.verdict = Verdict<ModP>::fails(
            {"trivial-square", {M.element(b), M.element(M.square_of(b))}, std::nullopt, "b^2 is nonzero and trivial"},
            "exhaustive");
        return rep;
      }
  rep.verdict = Verdict<ModP>::holds("exhaustive");
  return rep;
}

inline ClassReport<ModP> nilpotent_root_check(const FiniteModel& M, const CheckOptions& opt = {}) {
  auto rep =
      detail::report_base<ModP>(Property::NoNilpotentWithSquareRoot, M.algebra().field(), opt, Mode::Exhaustive);
  std::vector<char> nil_square(M.squares().size(), 0);
  bool any = false;
  for (std::size_t s = 0; s < M.squares().size(); ++s)
    if (M.squares()[s] != 0 && M.algebra().is_nilpotent(M.element(M.squares()[s]))) {
      nil_square[s] = 1;
      any = true;
    }
  if (any)
    for (std::uint64_t b = 0; b < M.size(); ++b)
      if (nil_square[static_cast<std::size_t>(M.square_pos(M.square_of(b)))]) {
        rep.verdict = Verdict<ModP>::fails(
            {"nilpotent-square-root", {M.element(b), M.element(M.square_of(b))}, std::nullopt,
             "b^2 is nonzero and nilpotent"},
            "exhaustive");
        return rep;
      }
  rep.verdict = Verdict<ModP>::holds("exhaustive");
  return rep;
}

// ---------------------------------------------------------------------------
// Symbolic routes: sound partial information over Q or beyond the budget.

namespace detail {

template <FieldScalar S>
std::optional<Witness<S>> search_nilpotent_root(const JordanAlgebra<S>& A) {
  for (const auto& b : candidate_elements(A)) {
    Element<S> s = A.square(b);
    if (!s.is_zero() && A.is_nilpotent(s)) return Witness<S>{"nilpotent-square-root", {b, s}, std::nullopt,
                                                             "b^2 is nonzero and nilpotent"};
  }
  return std::nullopt;
}

template <FieldScalar S>
std::optional<Witness<S>> search_trivial_square(const JordanAlgebra<S>& A) {
  for (const auto& b : candidate_elements(A)) {
    Element<S> s = A.square(b);
    if (!s.is_zero() && is_trivial(A, s))
      return Witness<S>{"trivial-square", {b, s}, std::nullopt, "b^2 is nonzero and trivial"};
  }
  return std::nullopt;
}

/// Decides whether some nonzero z in the affine piece has a square root, by
/// adding z = point + sum t_k w_k to b^2 = z and forcing z != 0 with s t_k = 1.
template <FieldScalar S>
Verdict<S> piece_has_nonzero_square(const JordanAlgebra<S>& A, const SolutionPiece<S>& piece) {
  const std::size_t n = A.dim();
  Subspace<S> D = Subspace<S>::span(A.field(), n, piece.directions);
  const bool linear = D.contains(piece.point);
  std::vector<Vec<S>> dirs = linear ? D.basis() : piece.directions;
  const std::size_t r = dirs.size();
  const Vec<S> target = linear ? zero_vec<S>(A.field(), n) : piece.point;
  auto base = square_equations(A, target);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < r; ++k)
      if (!is_zero(dirs[k][m])) base[m].add_linear(n + k, -dirs[k][m]);

  std::vector<std::vector<QuadPoly<S>>> systems;
  if (!linear) {
    systems.push_back(base);
  } else {
    for (std::size_t k = 0; k < r; ++k) {
      auto eqs = base;
      for (std::size_t j = 0; j < k; ++j) {
        QuadPoly<S> z(A.scalar(0));
        z.add_linear(n + j, A.scalar(1));
        eqs.push_back(z);
      }
      QuadPoly<S> nz(A.scalar(-1));
      nz.add_quadratic(n + k, n + r, A.scalar(1));
      eqs.push_back(nz);
      systems.push_back(std::move(eqs));
    }
  }
  bool complete = true;
  for (auto& eqs : systems) {
    auto res = solve_quadratic_system(A.field(), n + r + 1, std::move(eqs));
    for (const auto& p : res.pieces) {
      Element<S> b(Vec<S>(p.point.begin(), p.point.begin() + static_cast<std::ptrdiff_t>(n)));
      Element<S> s = A.square(b);
      if (!s.is_zero() && is_trivial(A, s))
        return Verdict<S>::fails({"trivial-square", {b, s}, std::nullopt, "b^2 is nonzero and trivial"}, "symbolic");
      complete = false;
    }
    if (!res.complete) complete = false;
  }
  if (complete) return Verdict<S>::holds("symbolic");
  return Verdict<S>::unknown("square-root system inconclusive", "symbolic");
}

}  // namespace detail

template <FieldScalar S>
ClassReport<S> nondeg_check_symbolic(const JordanAlgebra<S>& A, const CheckOptions& opt) {
  auto rep = detail::report_base<S>(Property::Nondegenerate, A.field(), opt, Mode::Symbolic);
  auto T = trivial_elements(A, CheckOptions{opt.budget, opt.threads, Mode::Symbolic, opt.map_limit});
  if (auto z = T.nonzero_example(); z && is_trivial(A, *z)) {
    rep.verdict = Verdict<S>::fails({"trivial", {*z}, std::nullopt, "U_z = 0 and z^2 = 0"}, "symbolic");
    return rep;
  }
  bool only_zero = T.complete;
  for (const auto& p : T.pieces)
    if (!p.directions.empty() || !is_zero_vec<S>(p.point)) only_zero = false;
  rep.verdict = only_zero ? Verdict<S>::holds("symbolic")
                          : Verdict<S>::unknown("trivial-element system not fully resolved", "symbolic");
  return rep;
}

template <FieldScalar S>
ClassReport<S> quad_nondeg_check_symbolic(const JordanAlgebra<S>& A, const CheckOptions& opt) {
  auto rep = detail::report_base<S>(Property::QuadraticNondegenerate, A.field(), opt, Mode::Symbolic);
  auto T = trivial_elements(A, CheckOptions{opt.budget, opt.threads, Mode::Symbolic, opt.map_limit});
  if (!T.complete) {
    if (auto w = detail::search_trivial_square(A)) {
      rep.verdict = Verdict<S>::fails(std::move(*w), "candidate-search");
      return rep;
    }
    rep.verdict = Verdict<S>::unknown("trivial-element system not fully resolved", "symbolic");
    return rep;
  }
  bool unknown = false;
  for (const auto& piece : T.pieces) {
    if (piece.directions.empty() && is_zero_vec<S>(piece.point)) continue;
    auto v = detail::piece_has_nonzero_square(A, piece);
    if (v.outcome == Outcome::Fails) {
      rep.verdict = std::move(v);
      return rep;
    }
    if (v.outcome == Outcome::Unknown) unknown = true;
  }
  rep.verdict = unknown ? Verdict<S>::unknown("square-root system inconclusive", "symbolic")
                        : Verdict<S>::holds("symbolic");
  return rep;
}

template <FieldScalar S>
ClassReport<S> nilpotent_root_check_symbolic(const JordanAlgebra<S>& A, const CheckOptions& opt) {
  auto rep = detail::report_base<S>(Property::NoNilpotentWithSquareRoot, A.field(), opt, Mode::Symbolic);
  if (auto w = detail::search_nilpotent_root(A)) {
    rep.verdict = Verdict<S>::fails(std::move(*w), "candidate-search");
    return rep;
  }
  rep.verdict = Verdict<S>::unknown("no witness among candidate elements; absence is not decidable here",
                                    "candidate-search");
  return rep;
}

/// Probes x for which the RJ condition can be certified: ker U_x n span(A^2)
/// and U_e(A) n span(A^2) agree as subspaces, which implies agreement on A^2.
template <FieldScalar S>
std::vector<Element<S>> default_probes(const JordanAlgebra<S>& A) {
  std::vector<Element<S>> out{A.zero()};
  if (A.unit()) out.push_back(*A.unit());
  for (std::size_t i = 0; i < A.dim(); ++i) out.push_back(A.basis(i));
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j) out.push_back(A.basis(i) + A.basis(j));
  if (A.unit())
    for (std::size_t i = 0; i < A.dim(); ++i) out.push_back(*A.unit() + A.basis(i));
  return out;
}

template <FieldScalar S>
ClassReport<S> rj_check_symbolic(const JordanAlgebra<S>& A, const CheckOptions& opt,
                                 const std::vector<Element<S>>& probes = {}) {
  auto rep = detail::report_base<S>(Property::RJ, A.field(), opt, Mode::Symbolic);
  if (auto w = detail::search_nilpotent_root(A)) {
    rep.verdict = Verdict<S>::fails(std::move(*w), "nilpotent-square-root");
    rep.notes.push_back("an RJ-algebra has no nilpotent element with a square root");
    return rep;
  }
  auto qn = quad_nondeg_check_symbolic(A, opt);
  if (qn.verdict.outcome == Outcome::Fails) {
    rep.verdict = qn.verdict;
    rep.verdict.method = "trivial-square";
    rep.notes.push_back("an RJ-algebra is quadratic non-degenerate");
    return rep;
  }
  const Subspace<S> SS = squares_span(A);
  auto E = idempotents(A, CheckOptions{opt.budget, opt.threads, Mode::Symbolic, opt.map_limit});
  std::vector<Subspace<S>> images;
  for (const auto& e : E.elements) images.push_back(intersect(inner_ideal(A, e), SS));
  std::vector<Element<S>> all = default_probes(A);
  all.insert(all.end(), probes.begin(), probes.end());
  std::size_t certified = 0;
  for (const auto& x : all) {
    Subspace<S> K = intersect(kernel(A.u_op(x)), SS);
    for (std::size_t k = 0; k < images.size(); ++k)
      if (images[k] == K) {
        rep.idempotent_map.emplace_back(x, E.elements[k]);
        ++certified;
        break;
      }
  }
  rep.verdict = Verdict<S>::unknown("certified " + std::to_string(certified) + " of " + std::to_string(all.size()) +
                                        " probes; membership in A^2 is not decided over this field",
                                    "symbolic");
  return rep;
}

// ---------------------------------------------------------------------------
// Entry points choosing exhaustive or symbolic mode.

template <FieldScalar S>
ClassReport<S> rj_check(const JordanAlgebra<S>& A, const CheckOptions& opt = {},
                        const std::vector<Element<S>>& probes = {}) {
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) return rj_check(FiniteModel(A, opt.budget, opt.threads), opt);
  } else {
    exhaustive_mode(A, opt);
  }
  return rj_check_symbolic(A, opt, probes);
}

template <FieldScalar S>
ClassReport<S> bj_check_direct(const JordanAlgebra<S>& A, const CheckOptions& opt = {}) {
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) return bj_check_direct(FiniteModel(A, opt.budget, opt.threads), opt);
  } else {
    exhaustive_mode(A, opt);
  }
  auto rep = detail::report_base<S>(Property::BJ, A.field(), opt, Mode::Symbolic);
  auto rj = rj_check_symbolic(A, opt);
  if (rj.verdict.outcome == Outcome::Fails) {
    rep.verdict = rj.verdict;
    rep.notes.push_back("the RJ condition already fails");
    return rep;
  }
  rep.verdict = Verdict<S>::unknown("subset closure needs exhaustive mode", "symbolic");
  return rep;
}

template <FieldScalar S>
ClassReport<S> rickart_check(const JordanAlgebra<S>& A, const CheckOptions& opt = {}) {
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) return rickart_check(FiniteModel(A, opt.budget, opt.threads), opt);
  } else {
    exhaustive_mode(A, opt);
  }
  auto rep = detail::report_base<S>(Property::RickartJordan, A.field(), opt, Mode::Symbolic);
  rep.verdict = Verdict<S>::unknown("right annihilators are not linear; needs exhaustive mode", "symbolic");
  return rep;
}

template <FieldScalar S>
ClassReport<S> baer_check(const JordanAlgebra<S>& A, const CheckOptions& opt = {}) {
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) return baer_check(FiniteModel(A, opt.budget, opt.threads), opt);
  } else {
    exhaustive_mode(A, opt);
  }
  auto rep = detail::report_base<S>(Property::BaerJordan, A.field(), opt, Mode::Symbolic);
  rep.verdict = Verdict<S>::unknown("right annihilators are not linear; needs exhaustive mode", "symbolic");
  return rep;
}

template <FieldScalar S>
ClassReport<S> nondeg_check(const JordanAlgebra<S>& A, const CheckOptions& opt = {}) {
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) return nondeg_check(FiniteModel(A, opt.budget, opt.threads), opt);
  } else {
    exhaustive_mode(A, opt);
  }
  return nondeg_check_symbolic(A, opt);
}

template <FieldScalar S>
ClassReport<S> quad_nondeg_check(const JordanAlgebra<S>& A, const CheckOptions& opt = {}) {
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) return quad_nondeg_check(FiniteModel(A, opt.budget, opt.threads), opt);
  } else {
    exhaustive_mode(A, opt);
  }
  return quad_nondeg_check_symbolic(A, opt);
}

template <FieldScalar S>
ClassReport<S> nilpotent_root_check(const JordanAlgebra<S>& A, const CheckOptions& opt = {}) {
  if constexpr (std::is_same_v<S, ModP>) {
    if (exhaustive_mode(A, opt)) return nilpotent_root_check(FiniteModel(A, opt.budget, opt.threads), opt);
  } else {
    exhaustive_mode(A, opt);
  }
  return nilpotent_root_check_symbolic(A, opt);
}

}  // namespace jordan
