#pragma once

#include "jordan/annihilators/verify.hpp"
#include "jordan/corpus/algebras.hpp"
#include "jordan/corpus/sweeps.hpp"
#include "jordan/io/json.hpp"
#include "jordan/radicals/lattice.hpp"
#include "jordan/radicals/radicals.hpp"
#include "jordan/util/parallel.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace jordan {

// ---------------------------------------------------------------------------
// Corpus algebras.

struct CorpusAlgebra {
  std::string id;
  std::string description;
  AnyAlgebra algebra;
};

inline std::vector<CorpusAlgebra> corpus_algebras() {
  const auto F3 = FieldDesc::prime(3), F5 = FieldDesc::prime(5), Q = FieldDesc::rationals();
  std::vector<CorpusAlgebra> out;
  auto add = [&](std::string id, std::string d, AnyAlgebra A) { out.push_back({std::move(id), std::move(d), std::move(A)}); };
  add("e2_f3", "F1 + Fe12 inside M_2", example2<ModP>(F3));
  add("e2_f5", "F1 + Fe12 inside M_2", example2<ModP>(F5));
  add("e2_q", "F1 + Fe12 inside M_2", example2<Rational>(Q));
  for (std::size_t k = 1; k <= 3; ++k)
    add("e3_" + std::to_string(k) + "_f3", "F1 + sum of k square-zero matrix units", example3<ModP>(k, F3));
  add("e3_2_q", "F1 + sum of k square-zero matrix units", example3<Rational>(2, Q));
  for (std::size_t k = 1; k <= 3; ++k)
    add("nu_" + std::to_string(k) + "_f3", "k square-zero matrix units, no unit", nonunital_nil<ModP>(k, F3));
  add("nu_2_q", "k square-zero matrix units, no unit", nonunital_nil<Rational>(2, Q));
  add("h2_f3", "symmetric 2x2 matrices", hermitian_matrix_algebra<ModP>(2, 1, F3));
  add("h2_f5", "symmetric 2x2 matrices", hermitian_matrix_algebra<ModP>(2, 1, F5));
  add("h2c_f3", "hermitian 2x2 matrices over the degree-2 composition algebra", hermitian_matrix_algebra<ModP>(2, 2, F3));
  add("h2h_f3", "hermitian 2x2 matrices over the degree-4 composition algebra", hermitian_matrix_algebra<ModP>(2, 4, F3));
  add("h3_f3", "symmetric 3x3 matrices", hermitian_matrix_algebra<ModP>(3, 1, F3));
  add("h2_q", "symmetric 2x2 matrices", hermitian_matrix_algebra<Rational>(2, 1, Q));
  add("m2_f3", "all 2x2 matrices, symmetrized product", full_matrix_jordan<ModP>(2, F3));
  add("m2_f5", "all 2x2 matrices, symmetrized product", full_matrix_jordan<ModP>(2, F5));
  add("m3_f3", "all 3x3 matrices, symmetrized product", full_matrix_jordan<ModP>(3, F3));
  add("m2_q", "all 2x2 matrices, symmetrized product", full_matrix_jordan<Rational>(2, Q));
  add("m3_q", "all 3x3 matrices, symmetrized product", full_matrix_jordan<Rational>(3, Q));
  add("seq1_h2_f3", "sequences of length 1 in H_2", truncated_sequence_algebra<ModP>(1, 2, 1, F3));
  add("seq2_h2_f3", "sequences of length 2 in H_2", truncated_sequence_algebra<ModP>(2, 2, 1, F3));
  add("albert_q", "hermitian 3x3 octonion matrices", hermitian_matrix_algebra<Rational>(3, 8, Q));
  return out;
}

// ---------------------------------------------------------------------------
// Claims.

enum class ClaimStatus { Pass, Fail, Unknown, Discrepancy };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Unknown: return "unknown";
    case ClaimStatus::Discrepancy: return "discrepancy";
  }
  return "unknown";
}

struct Observation {
  std::string observed;
  std::string detail;
};

class CorpusContext;

struct Claim {
  std::string id;
  std::string algebra;    // corpus algebra id
  std::string locus;      // where the statement comes from
  std::string source;     // "paper", "derived" or "trivial"
  std::string statement;
  std::string expected;
  std::string field_note;  // set when the statement is made over R and tested over another field
  bool finding = false;    // disagreement is reported as a discrepancy, not a failure
  std::function<Observation(CorpusContext&)> run;
};

struct ClaimResult {
  const Claim* claim = nullptr;
  Observation obs;
  ClaimStatus status = ClaimStatus::Unknown;
};

/// Algebras by id with lazily built finite models shared between claims.
class CorpusContext {
 public:
  explicit CorpusContext(CheckOptions opt = {}) : opt_(opt) {
    for (auto& a : corpus_algebras()) {
      auto entry = std::make_unique<Entry>();
      entry->info = std::move(a);
      entries_.emplace(entry->info.id, std::move(entry));
    }
  }

  const CheckOptions& options() const { return opt_; }

  const AnyAlgebra& any(const std::string& id) const { return entry(id).info.algebra; }
  template <FieldScalar S>
  const JordanAlgebra<S>& algebra(const std::string& id) const {
    return std::get<JordanAlgebra<S>>(any(id));
  }
  const JordanAlgebra<ModP>& fp(const std::string& id) const { return algebra<ModP>(id); }
  const JordanAlgebra<Rational>& q(const std::string& id) const { return algebra<Rational>(id); }

  const FiniteModel& model(const std::string& id) const {
    auto& e = entry(id);
    std::call_once(e.once, [&] { e.model = std::make_unique<FiniteModel>(fp(id), opt_.budget, opt_.threads); });
    return *e.model;
  }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (const auto& [id, e] : entries_) out.push_back(id);
    return out;
  }
  const CorpusAlgebra& info(const std::string& id) const { return entry(id).info; }

 private:
  struct Entry {
    CorpusAlgebra info;
    mutable std::once_flag once;
    mutable std::unique_ptr<FiniteModel> model;
  };
  const Entry& entry(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw Error(ErrorCode::InvalidArgument, "unknown corpus algebra '" + id + "'");
    return *it->second;
  }

  CheckOptions opt_;
  std::map<std::string, std::unique_ptr<Entry>> entries_;
};

namespace claims_detail {

inline std::string tf(bool b) { return b ? "true" : "false"; }

/// ⊥S n A^2 == U_e(A) n A^2 as sets of squares.
inline bool perp_matches(const FiniteModel& M, const std::vector<Element<ModP>>& S, const Element<ModP>& e) {
  return M.squares_in(left_annihilator(M.algebra(), S)) == M.squares_in(inner_ideal(M.algebra(), e));
}

inline std::vector<std::int64_t> nonzero_residues(std::uint32_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 1; v < p; ++v) out.push_back(v);
  return out;
}

/// Calls fn on every coordinate vector in {0..p-1}^n.
template <class Fn>
void for_all_tuples(std::uint32_t p, std::size_t n, Fn&& fn) {
  std::vector<std::int64_t> t(n, 0);
  const std::uint64_t total = checked_pow(p, n);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t r = c;
    for (std::size_t i = n; i-- > 0;) {
      t[i] = static_cast<std::int64_t>(r % p);
      r /= p;
    }
    fn(t);
  }
}

template <FieldScalar S>
Observation verdict_obs(const ClassReport<S>& r, const JordanAlgebra<S>& A) {
  std::string d = r.verdict.method;
  if (r.verdict.witness) {
    d += "; witness";
    for (const auto& e : r.verdict.witness->elements) d += " " + A.format(e);
  }
  if (!r.verdict.reason.empty()) d += "; " + r.verdict.reason;
  return {to_string(r.outcome()), d};
}

/// x = l 1 + sum_i l_i e_i in E3(k) (or E2 when k = 1 and the label is e12).
inline Element<ModP> unit_plus_nil(const JordanAlgebra<ModP>& A, std::int64_t l, const std::vector<std::int64_t>& li) {
  std::vector<std::int64_t> c{l};
  c.insert(c.end(), li.begin(), li.end());
  return A.element(c);
}

/// The displayed U-formula for F1 + sum F e_i with products of the e_i zero:
/// U_{l1 + n}(a1 + m) = l^2 a 1 + 2 l a n + l^2 m. Checked on all of A x A.
inline Observation unit_plus_nil_u_formula(const JordanAlgebra<ModP>& A) {
  const std::size_t k = A.dim() - 1;
  const auto p = A.field().p;
  std::uint64_t count = 0;
  bool ok = true;
  std::string bad;
  for_all_tuples(p, 2 * (k + 1), [&](const std::vector<std::int64_t>& t) {
    if (!ok) return;
    std::vector<std::int64_t> xs(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k + 1));
    std::vector<std::int64_t> ys(t.begin() + static_cast<std::ptrdiff_t>(k + 1), t.end());
    const auto x = A.element(xs), y = A.element(ys);
    const ModP l = A.scalar(xs[0]), a = A.scalar(ys[0]);
    Vec<ModP> want(k + 1);
    want[0] = l * l * a;
    for (std::size_t i = 1; i <= k; ++i) want[i] = A.scalar(2) * l * a * A.scalar(xs[i]) + l * l * A.scalar(ys[i]);
    ++count;
    if (!(A.u(x, y) == Element<ModP>(want))) {
      ok = false;
      bad = "U_x y differs at x = " + A.format(x) + ", y = " + A.format(y);
    }
  });
  return {tf(ok), ok ? std::to_string(count) + " pairs (x, y)" : bad};
}

/// Same identity over Q: both sides are polynomials of degree <= 2 in each
/// scalar, so agreement on a 3-point grid per scalar proves it.
inline Observation unit_plus_nil_u_formula_q(const JordanAlgebra<Rational>& A) {
  const std::size_t k = A.dim() - 1;
  const std::vector<std::int64_t> grid{-1, 0, 2};
  std::uint64_t count = 0;
  const std::size_t n = 2 * (k + 1);
  std::vector<std::size_t> pos(n, 0);
  for (;;) {
    std::vector<std::int64_t> xs(k + 1), ys(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      xs[i] = grid[pos[i]];
      ys[i] = grid[pos[k + 1 + i]];
    }
    const auto x = A.element(xs), y = A.element(ys);
    const Rational l(xs[0]), a(ys[0]);
    Vec<Rational> want(k + 1);
    want[0] = l * l * a;
    for (std::size_t i = 1; i <= k; ++i) want[i] = Rational(2) * l * a * Rational(xs[i]) + l * l * Rational(ys[i]);
    ++count;
    if (!(A.u(x, y) == Element<Rational>(want)))
      return {"false", "U_x y differs at x = " + A.format(x) + ", y = " + A.format(y)};
    std::size_t i = 0;
    while (i < n && ++pos[i] == grid.size()) pos[i++] = 0;
    if (i == n) break;
  }
  return {"true", "polynomial identity checked on a 3-point grid per scalar (" + std::to_string(count) + " points)"};
}

inline Observation same_subspace(const Subspace<ModP>& a, const Subspace<ModP>& b, const std::string& what) {
  return {tf(a == b), what + ": dim " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank())};
}

template <FieldScalar S>
Subspace<S> span_of(const JordanAlgebra<S>& A, std::initializer_list<std::size_t> basis) {
  std::vector<Vec<S>> rows;
  for (auto i : basis) rows.push_back(A.basis(i).coords());
  return Subspace<S>::span(A.field(), A.dim(), std::move(rows));
}

/// span of the nilpotent generators of E2/E3/NU: every basis vector except a leading unit.
template <FieldScalar S>
Subspace<S> nil_generators(const JordanAlgebra<S>& A) {
  std::vector<Vec<S>> rows;
  for (std::size_t i = A.unit() ? 1 : 0; i < A.dim(); ++i) rows.push_back(A.basis(i).coords());
  return Subspace<S>::span(A.field(), A.dim(), std::move(rows));
}

inline Element<ModP> remark2_matrix(const JordanAlgebra<ModP>& A) {
  // e12 + e13 + e23 in the matrix-unit basis of M_3.
  return A.element({0, 1, 1, 0, 0, 1, 0, 0, 0});
}

}  // namespace claims_detail

inline std::vector<Claim> corpus_claims() {
  using namespace claims_detail;
  std::vector<Claim> C;
  const std::string overR = "stated over R; tested over ";
  auto add = [&](Claim c) { C.push_back(std::move(c)); };

  // --- §1 Example 2 --------------------------------------------------------
  const std::string ex2 = "§1 Example 2";
  auto e2perp = [](std::string which) {
    return [which](CorpusContext& ctx) -> Observation {
      const auto& M = ctx.model("e2_f3");
      const auto& A = M.algebra();
      const auto one = A.element({1, 0}), zero = A.zero(), e12 = A.element({0, 1});
      bool ok = true;
      std::size_t n = 0;
      if (which == "0") ok = perp_matches(M, {zero}, one), n = 1;
      if (which == "1") ok = perp_matches(M, {one}, zero), n = 1;
      if (which == "e12") ok = perp_matches(M, {e12}, one), n = 1;
      for (auto l : nonzero_residues(A.field().p)) {
        if (which == "l1") ok = ok && perp_matches(M, {A.element({l, 0})}, zero), ++n;
        if (which == "le12") ok = ok && perp_matches(M, {A.element({0, l})}, one), ++n;
      }
      return {tf(ok), std::to_string(n) + " set equalities over " + std::to_string(M.squares().size()) + " squares"};
    };
  };
  add({"ex2-01-perp-zero", "e2_f3", ex2, "paper", "⊥{0} n A^2 = U_1(A) n A^2", "true", overR + "F_3", false, e2perp("0")});
  add({"ex2-02-perp-one", "e2_f3", ex2, "paper", "⊥{1} n A^2 = U_0(A) n A^2", "true", overR + "F_3", false, e2perp("1")});
  add({"ex2-03-perp-e12", "e2_f3", ex2, "paper", "⊥{e12} n A^2 = U_1(A) n A^2", "true", overR + "F_3", false,
       e2perp("e12")});
  add({"ex2-04-perp-lambda-one", "e2_f3", ex2, "paper", "⊥{λ1} n A^2 = U_0(A) n A^2 for every λ != 0", "true",
       overR + "F_3", false, e2perp("l1")});
  add({"ex2-05-perp-lambda-e12", "e2_f3", ex2, "paper", "⊥{λe12} n A^2 = U_1(A) n A^2 for every λ != 0", "true",
       overR + "F_3", false, e2perp("le12")});
  add({"ex2-06-u-formula", "e2_f3", ex2, "paper",
       "U_{λ1+μe12}(α1+βe12) = λ^2α1 + λ^2βe12 + 2λμαe12 for all scalars", "true", overR + "F_3", false,
       [](CorpusContext& ctx) { return unit_plus_nil_u_formula(ctx.fp("e2_f3")); }});
  add({"ex2-07-u-formula-q", "e2_q", ex2, "paper", "U_{λ1+μe12}(α1+βe12) = λ^2α1 + λ^2βe12 + 2λμαe12 as a polynomial identity",
       "true", overR + "Q", false, [](CorpusContext& ctx) { return unit_plus_nil_u_formula_q(ctx.q("e2_q")); }});
  add({"ex2-08-perp-generic", "e2_f3", ex2, "paper", "⊥{λ1+μe12} n A = U_0(A) n A for λ, μ != 0", "true",
       overR + "F_3", false, [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.fp("e2_f3");
         bool ok = true;
         for (auto l : nonzero_residues(3))
           for (auto m : nonzero_residues(3)) ok = ok && left_annihilator(A, {A.element({l, m})}).is_zero();
         return {tf(ok), "kernel of U_x is zero for all 4 such x"};
       }});
  add({"ex2-09-perp-generic-q", "e2_q", ex2, "paper", "⊥{λ1+μe12} = {0} for sample λ, μ != 0", "true", overR + "Q",
       false, [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.q("e2_q");
         const std::vector<Rational> vals{Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(-3, 7)};
         bool ok = true;
         for (const auto& l : vals)
           for (const auto& m : vals) ok = ok && left_annihilator(A, {Element<Rational>(Vec<Rational>{l, m})}).is_zero();
         return {tf(ok), "25 exact kernel computations"};
       }});
  add({"ex2-10-rj", "e2_f3", ex2, "paper", "A is an RJ-algebra", "Holds", overR + "F_3", false,
       [](CorpusContext& ctx) { return verdict_obs(rj_check(ctx.model("e2_f3"), ctx.options()), ctx.fp("e2_f3")); }});
  add({"ex2-11-rj-f5", "e2_f5", ex2, "paper", "A is an RJ-algebra", "Holds", overR + "F_5", false,
       [](CorpusContext& ctx) { return verdict_obs(rj_check(ctx.model("e2_f5"), ctx.options()), ctx.fp("e2_f5")); }});
  add({"ex2-12-rj-map", "e2_f3", ex2, "paper", "RJ idempotents: 0 -> 1, 1 -> 0, e12 -> 1", "true", overR + "F_3", false,
       [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.fp("e2_f3");
         auto r = rj_check(ctx.model("e2_f3"), ctx.options());
         auto lookup = [&](const Element<ModP>& x) -> std::optional<Element<ModP>> {
           for (const auto& [y, e] : r.idempotent_map)
             if (y == x) return e;
           return std::nullopt;
         };
         const auto one = A.element({1, 0}), zero = A.zero(), e12 = A.element({0, 1});
         const bool ok = lookup(zero) == one && lookup(one) == zero && lookup(e12) == one;
         return {tf(ok), "map of " + std::to_string(r.idempotent_map.size()) + " elements"};
       }});
  add({"ex2-13-rj-q", "e2_q", ex2, "derived", "RJ verdict over Q is Holds or Unknown, never Fails", "true",
       overR + "Q", false, [](CorpusContext& ctx) -> Observation {
         auto r = rj_check(ctx.q("e2_q"), ctx.options());
         return {tf(r.outcome() != Outcome::Fails), to_string(r.outcome()) + "; " + r.verdict.reason};
       }});
  add({"ex2-14-trivial", "e2_f3", ex2, "paper", "the trivial elements are the multiples of e12", "true", overR + "F_3",
       false, [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.fp("e2_f3");
         auto T = trivial_elements(A, ctx.options());
         std::vector<Element<ModP>> want{A.zero(), A.element({0, 1}), A.element({0, 2})};
         return {tf(T.elements == want), std::to_string(T.elements.size()) + " trivial elements"};
       }});
  add({"ex2-15-trivial-q", "e2_q", ex2, "paper", "e12 is trivial and A is degenerate", "Fails", overR + "Q", false,
       [](CorpusContext& ctx) {
         return verdict_obs(nondeg_check(ctx.q("e2_q"), ctx.options()), ctx.q("e2_q"));
       }});
  add({"ex2-16-nil", "e2_f3", ex2, "paper", "Nil(A) = Fe12", "true", overR + "F_3", false,
       [](CorpusContext& ctx) {
         const auto& A = ctx.fp("e2_f3");
         return same_subspace(nil_radical(A, ctx.options()).subspace, span_of(A, {1}), "Nil(A) against span{e12}");
       }});
  add({"ex2-17-quad-nondeg", "e2_f3", ex2, "derived", "A is quadratic non-degenerate", "Holds", "", false,
       [](CorpusContext& ctx) {
         return verdict_obs(quad_nondeg_check(ctx.model("e2_f3"), ctx.options()), ctx.fp("e2_f3"));
       }});

  // --- §1 Example 3 --------------------------------------------------------
  const std::string ex3 = "§1 Example 3";
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::string id = "e3_" + std::to_string(k) + "_f3";
    const std::string pre = "ex3-k" + std::to_string(k) + "-";
    auto perp = [id](std::string which) {
      return [id, which](CorpusContext& ctx) -> Observation {
        const auto& M = ctx.model(id);
        const auto& A = M.algebra();
        const std::size_t k = A.dim() - 1;
        const auto one = *A.unit(), zero = A.zero();
        bool ok = true;
        std::size_t n = 0;
        if (which == "0") ok = perp_matches(M, {zero}, one), n = 1;
        if (which == "1") ok = perp_matches(M, {one}, zero), n = 1;
        if (which == "ei")
          for (std::size_t i = 1; i <= k; ++i) ok = ok && perp_matches(M, {A.basis(i)}, one), ++n;
        if (which == "l1")
          for (auto l : nonzero_residues(A.field().p)) ok = ok && perp_matches(M, {A.scalar(l) * one}, zero), ++n;
        if (which == "sum")
          for_all_tuples(A.field().p, k, [&](const std::vector<std::int64_t>& li) {
            ok = ok && perp_matches(M, {unit_plus_nil(A, 0, li)}, one);
            ++n;
          });
        if (which == "generic")
          for_all_tuples(A.field().p, k, [&](const std::vector<std::int64_t>& li) {
            for (auto l : nonzero_residues(A.field().p)) {
              ok = ok && left_annihilator(A, {unit_plus_nil(A, l, li)}).is_zero();
              ++n;
            }
          });
        return {tf(ok), std::to_string(n) + " checks"};
      };
    };
    add({pre + "01-perp-zero", id, ex3, "paper", "⊥{0} n A^2 = U_1(A) n A^2", "true", overR + "F_3", false, perp("0")});
    add({pre + "02-perp-one", id, ex3, "paper", "⊥{1} n A^2 = U_0(A) n A^2", "true", overR + "F_3", false, perp("1")});
    add({pre + "03-perp-generator", id, ex3, "paper", "⊥{e_{2i-1,2i}} n A^2 = U_1(A) n A^2 for every i", "true",
         overR + "F_3", false, perp("ei")});
    add({pre + "04-perp-lambda-one", id, ex3, "paper", "⊥{λ1} n A^2 = U_0(A) n A^2 for every λ != 0", "true",
         overR + "F_3", false, perp("l1")});
    add({pre + "05-perp-sum", id, ex3, "paper", "⊥{Σ λ_i e_{2i-1,2i}} n A^2 = U_1(A) n A^2 for all λ_i", "true",
         overR + "F_3", false, perp("sum")});
    add({pre + "06-u-formula", id, ex3, "paper",
         "U_{λ1+Σλ_i e_i}(α1+Σα_i e_i) = λ^2α1 + 2λα Σλ_i e_i + λ^2 Σα_i e_i", "true", overR + "F_3", false,
         [id](CorpusContext& ctx) { return unit_plus_nil_u_formula(ctx.fp(id)); }});
    add({pre + "07-perp-generic", id, ex3, "paper", "⊥{λ1 + Σλ_i e_i} n A = U_0(A) n A^2 for λ != 0", "true",
         overR + "F_3", false, perp("generic")});
    add({pre + "08-rj", id, ex3, "paper", "A is an RJ-algebra", "Holds", overR + "F_3", false,
         [id](CorpusContext& ctx) { return verdict_obs(rj_check(ctx.model(id), ctx.options()), ctx.fp(id)); }});
  }
  add({"ex3-k2-09-nil", "e3_2_f3", ex3, "paper", "Nil(A) = Σ F e_{2i-1,2i}", "true", overR + "F_3", false,
       [](CorpusContext& ctx) {
         const auto& A = ctx.fp("e3_2_f3");
         return same_subspace(nil_radical(A, ctx.options()).subspace, nil_generators(A), "Nil(A) against the generators");
       }});
  add({"ex3-k2-10-trivial", "e3_2_f3", ex3, "paper", "A has a nonzero trivial element", "Fails", overR + "F_3", false,
       [](CorpusContext& ctx) {
         return verdict_obs(nondeg_check(ctx.model("e3_2_f3"), ctx.options()), ctx.fp("e3_2_f3"));
       }});
  add({"ex3-k2-11-u-formula-q", "e3_2_q", ex3, "paper",
       "U_{λ1+Σλ_i e_i}(α1+Σα_i e_i) = λ^2α1 + 2λα Σλ_i e_i + λ^2 Σα_i e_i as a polynomial identity", "true",
       overR + "Q", false, [](CorpusContext& ctx) { return unit_plus_nil_u_formula_q(ctx.q("e3_2_q")); }});

  // --- Remark 1 ------------------------------------------------------------
  const std::string rem1 = "§1 Remark 1";
  for (std::size_t k = 2; k <= 3; ++k) {
    const std::string id = "nu_" + std::to_string(k) + "_f3";
    const std::string pre = "rem1-k" + std::to_string(k) + "-";
    add({pre + "01-idempotents", id, rem1, "paper", "the only idempotent is 0", "true", overR + "F_3", false,
         [id](CorpusContext& ctx) -> Observation {
           const auto& M = ctx.model(id);
           return {tf(M.idempotents() == std::vector<std::uint32_t>{0}),
                   std::to_string(M.idempotents().size()) + " idempotents"};
         }});
    add({pre + "02-perp-zero", id, rem1, "paper", "⊥{0} n A^2 = U_0(A) n A^2", "true", overR + "F_3", false,
         [id](CorpusContext& ctx) -> Observation {
           const auto& M = ctx.model(id);
           return {tf(perp_matches(M, {M.algebra().zero()}, M.algebra().zero())), "sets of squares compared"};
         }});
    add({pre + "03-perp-zero-literal", id, rem1, "derived",
         "literal reading without n A^2 on the left: ⊥{0} = U_0(A) n A^2", "false", "", false,
         [id](CorpusContext& ctx) -> Observation {
           const auto& M = ctx.model(id);
           const auto& A = M.algebra();
           const bool eq = left_annihilator(A, {A.zero()}).rank() == 0;
           return {tf(eq), "⊥{0} = A has " + std::to_string(M.size()) + " elements while U_0(A) n A^2 = {0}"};
         }});
    add({pre + "04-rj", id, rem1, "paper", "A is an RJ-algebra without a unit", "Holds", overR + "F_3", false,
         [id](CorpusContext& ctx) {
           auto r = rj_check(ctx.model(id), ctx.options());
           auto o = verdict_obs(r, ctx.fp(id));
           if (ctx.fp(id).unit() || detect_unit(ctx.fp(id))) o.observed = "has a unit";
           return o;
         }});
  }
  add({"rem1-k2-05-idempotents-q", "nu_2_q", rem1, "paper", "the only idempotent is 0", "true", overR + "Q", false,
       [](CorpusContext& ctx) -> Observation {
         auto E = idempotents(ctx.q("nu_2_q"), ctx.options());
         const bool ok = E.complete && E.elements.size() == 1 && E.elements[0].is_zero();
         return {tf(ok), E.method + ", complete = " + tf(E.complete)};
       }});

  // --- Remark 2 ------------------------------------------------------------
  const std::string rem2 = "§1 Remark 2";
  add({"rem2-01-square", "m3_f3", rem2, "paper", "N = e12+e13+e23 has N^2 = e13", "true", overR + "F_3", false,
       [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.fp("m3_f3");
         const auto N = remark2_matrix(A);
         return {tf(A.square(N) == A.basis(2)), "N^2 = " + A.format(A.square(N))};
       }});
  add({"rem2-02-fourth-power", "m3_f3", rem2, "paper", "N^4 = (N^2)^2 = 0", "true", overR + "F_3", false,
       [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.fp("m3_f3");
         const auto N = remark2_matrix(A);
         const bool ok = A.power(N, 4).is_zero() && A.square(A.square(N)).is_zero();
         return {tf(ok), "N^4 = " + A.format(A.power(N, 4))};
       }});
  add({"rem2-03-witness", "m3_f3", rem2, "paper", "(N, N^2) is a nilpotent element with a square root", "true",
       overR + "F_3", false, [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.fp("m3_f3");
         const auto N = remark2_matrix(A);
         Witness<ModP> w{"nilpotent-square-root", {N, A.square(N)}, std::nullopt, ""};
         auto c = verify_witness(A, Property::RJ, w, ctx.options());
         return {tf(c.ok), c.message};
       }});
  add({"rem2-04-rj", "m3_f3", rem2, "paper", "M_3(F)^+ is not an RJ-algebra", "Fails", overR + "F_3", false,
       [](CorpusContext& ctx) { return verdict_obs(rj_check(ctx.model("m3_f3"), ctx.options()), ctx.fp("m3_f3")); }});
  add({"rem2-05-canonical-witness", "m3_f3", rem2, "derived",
       "the first nilpotent-square-root witness b has b^3 = 0 != b^2, like N", "true", "", false,
       [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.fp("m3_f3");
         auto r = nilpotent_root_check(ctx.model("m3_f3"), ctx.options());
         if (!r.verdict.witness) return {"false", "no witness"};
         const auto& b = r.verdict.witness->elements[0];
         const bool ok = !A.square(b).is_zero() && A.power(b, 3).is_zero() && A.square(A.square(b)).is_zero();
         return {tf(ok), "b = " + A.format(b) + ", b^2 = " + A.format(A.square(b))};
       }});
  add({"rem2-06-rj-q", "m3_q", rem2, "paper", "M_3(F)^+ is not an RJ-algebra", "Fails", overR + "Q", false,
       [](CorpusContext& ctx) { return verdict_obs(rj_check(ctx.q("m3_q"), ctx.options()), ctx.q("m3_q")); }});

  // --- §2 Examples ---------------------------------------------------------
  add({"s2ex1-01-bj", "e2_f3", "§2 Examples 1", "paper", "A is a BJ-algebra", "Holds", overR + "F_3", false,
       [](CorpusContext& ctx) {
         return verdict_obs(bj_check_direct(ctx.model("e2_f3"), ctx.options()), ctx.fp("e2_f3"));
       }});
  add({"s2ex1-02-bj-lattice", "e2_f3", "§2 Examples 1", "paper", "RJ and a complete idempotent lattice", "Holds",
       overR + "F_3", false, [](CorpusContext& ctx) {
         return verdict_obs(bj_check_via_t25(ctx.model("e2_f3"), ctx.options()), ctx.fp("e2_f3"));
       }});
  add({"s2ex1-03-lattice", "e2_f3", "§2 Examples 1", "paper", "the idempotents are {0, 1}, a complete chain", "true",
       overR + "F_3", false, [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.fp("e2_f3");
         auto L = idempotent_lattice(A, ctx.options());
         const bool ok = L.elements.size() == 2 && L.elements[0].is_zero() && L.elements[1] == *A.unit() && L.complete &&
                         L.le(0, 1);
         return {tf(ok), std::to_string(L.elements.size()) + " idempotents, complete = " + tf(L.complete)};
       }});
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::string id = "e3_" + std::to_string(k) + "_f3";
    add({"s2ex2-k" + std::to_string(k) + "-bj", id, "§2 Examples 2", "paper", "A is a BJ-algebra", "Holds",
         overR + "F_3", false,
         [id](CorpusContext& ctx) { return verdict_obs(bj_check_direct(ctx.model(id), ctx.options()), ctx.fp(id)); }});
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::string id = "nu_" + std::to_string(k) + "_f3";
    const std::string pre = "s2ex3-k" + std::to_string(k) + "-";
    add({pre + "01-bj", id, "§2 Examples 3", "paper", "A is a BJ-algebra without a unit", "Holds", overR + "F_3", false,
         [id](CorpusContext& ctx) { return verdict_obs(bj_check_direct(ctx.model(id), ctx.options()), ctx.fp(id)); }});
    add({pre + "02-lattice", id, "§2 Examples 3", "paper", "the idempotent lattice {0} is complete", "true",
         overR + "F_3", false, [id](CorpusContext& ctx) -> Observation {
           auto L = idempotent_lattice(ctx.fp(id), ctx.options());
           const bool ok = L.elements.size() == 1 && L.elements[0].is_zero() && L.complete;
           return {tf(ok), std::to_string(L.elements.size()) + " idempotents"};
         }});
  }

  // --- hermitian matrices and sequences -----------------------------------
  add({"herm-h2_f3-rj", "h2_f3", "§1 Example 1", "derived", "H_2 over F_3 is an RJ-algebra", "Holds", "", false,
       [](CorpusContext& ctx) { return verdict_obs(rj_check(ctx.model("h2_f3"), ctx.options()), ctx.fp("h2_f3")); }});
  add({"herm-h2_f3-bj", "h2_f3", "§2 Example", "derived", "H_2 over F_3 is a BJ-algebra", "Holds", "", false,
       [](CorpusContext& ctx) {
         return verdict_obs(bj_check_direct(ctx.model("h2_f3"), ctx.options()), ctx.fp("h2_f3"));
       }});
  // Over R, C, H, O these algebras are formally real. The F_p versions below
  // are not, so disagreement is recorded as a finding.
  for (const auto& hw : std::vector<std::pair<std::string, std::string>>{
           {"h2c_f3", "H_2, degree 2, over F_3"}, {"h2h_f3", "H_2, degree 4, over F_3"},
           {"h3_f3", "H_3, degree 1, over F_3"}, {"h2_f5", "H_2, degree 1, over F_5"}}) {
    const std::string id = hw.first, what = hw.second;
    const std::string note = "stated over R, C, H and O where H_n is formally real; the F_p analogue is not formally real";
    add({"herm-" + id + "-rj", id, "§1 Example 1", "paper", what + " is an RJ-algebra", "Holds", note, true,
         [id](CorpusContext& ctx) { return verdict_obs(rj_check(ctx.model(id), ctx.options()), ctx.fp(id)); }});
    add({"herm-" + id + "-bj", id, "§2 Example", "paper", what + " is a BJ-algebra", "Holds", note, true,
         [id](CorpusContext& ctx) { return verdict_obs(bj_check_direct(ctx.model(id), ctx.options()), ctx.fp(id)); }});
  }
  add({"seq-01-rj", "seq2_h2_f3", "§1 Example 1", "derived", "length-2 truncation of the sequence algebra is RJ",
       "Holds", overR + "F_3", false, [](CorpusContext& ctx) {
         return verdict_obs(rj_check(ctx.model("seq2_h2_f3"), ctx.options()), ctx.fp("seq2_h2_f3"));
       }});
  add({"seq-02-bj", "seq2_h2_f3", "§2 Example", "derived", "length-2 truncation of the sequence algebra is BJ", "Holds",
       overR + "F_3", false, [](CorpusContext& ctx) {
         return verdict_obs(bj_check_direct(ctx.model("seq2_h2_f3"), ctx.options()), ctx.fp("seq2_h2_f3"));
       }});
  add({"seq-03-top", "seq2_h2_f3", "§2 Example", "trivial", "the idempotent lattice has top (1, 1)", "true", "", false,
       [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.fp("seq2_h2_f3");
         auto L = idempotent_lattice(A, ctx.options());
         const bool ok = L.top && L.elements[*L.top] == *A.unit();
         return {tf(ok), L.top ? "top = " + A.format(L.elements[*L.top]) : "no top"};
       }});
  add({"seq-04-length-one", "seq1_h2_f3", "§1 Example 1", "trivial", "length-1 truncation has the table of H_2",
       "true", "", false, [](CorpusContext& ctx) -> Observation {
         const auto& S = ctx.fp("seq1_h2_f3");
         const auto& H = ctx.fp("h2_f3");
         bool ok = S.dim() == H.dim();
         for (std::size_t i = 0; ok && i < S.dim(); ++i)
           for (std::size_t j = i; ok && j < S.dim(); ++j) ok = S.product(i, j) == H.product(i, j);
         return {tf(ok), "structure constants compared"};
       }});

  // --- radicals and the quotient theorems ----------------------------------
  for (const std::string id : {"e2_f3", "e3_2_f3"}) {
    const std::string pre = "thm16-" + id + "-";
    add({pre + "01-deg-nonzero", id, "Theorem 1.6", "derived", "Deg(A) is nonzero and spanned by the nilpotent generators",
         "true", "", false, [id](CorpusContext& ctx) {
           const auto& A = ctx.fp(id);
           return same_subspace(deg_radical(A, ctx.options()).subspace, nil_generators(A), "Deg(A) against the generators");
         }});
    add({pre + "02-quotient-rj", id, "Theorem 1.6", "derived", "A/Deg(A) is an RJ-algebra", "Holds", "", false,
         [id](CorpusContext& ctx) {
           const auto& A = ctx.fp(id);
           auto Q = quotient(A, deg_radical(A, ctx.options()).subspace);
           return verdict_obs(rj_check(Q.algebra, ctx.options()), Q.algebra);
         }});
    add({pre + "03-rj", id, "Theorem 1.6", "derived", "A is an RJ-algebra", "Holds", "", false,
         [id](CorpusContext& ctx) { return verdict_obs(rj_check(ctx.model(id), ctx.options()), ctx.fp(id)); }});
    add({pre + "04-quotient-bj", id, "Theorem 2.6", "derived", "A/Deg(A) is a BJ-algebra", "Holds", "", false,
         [id](CorpusContext& ctx) {
           const auto& A = ctx.fp(id);
           auto Q = quotient(A, deg_radical(A, ctx.options()).subspace);
           return verdict_obs(bj_check_direct(Q.algebra, ctx.options()), Q.algebra);
         }});
    add({pre + "05-bj", id, "Theorem 2.6", "derived", "A is a BJ-algebra", "Holds", "", false,
         [id](CorpusContext& ctx) { return verdict_obs(bj_check_direct(ctx.model(id), ctx.options()), ctx.fp(id)); }});
    add({pre + "06-deg-squares", id, "Theorem 1.6", "derived", "Deg(A) n A^2 = {0}", "true", "", false,
         [id](CorpusContext& ctx) -> Observation {
           auto r = deg_meets_squares_trivially(ctx.model(id), ctx.options());
           return {tf(r.ok), r.detail};
         }});
    add({pre + "07-radicals", id, "Corollary 1.7", "derived", "Deg(A) = Nil(A) = Rad(A)", "true", "", false,
         [id](CorpusContext& ctx) -> Observation {
           const auto& A = ctx.fp(id);
           auto D = deg_radical(A, ctx.options()), N = nil_radical(A, ctx.options()), R = jacobson_radical(A, ctx.options());
           const bool ok = D.subspace == N.subspace && N.subspace == R.subspace && N.method == "ideal-enumeration" &&
                           R.method == "ideal-enumeration";
           return {tf(ok), "dims " + std::to_string(D.subspace.rank()) + ", " + std::to_string(N.subspace.rank()) + ", " +
                               std::to_string(R.subspace.rank()) + " via " + N.method};
         }});
  }

  // --- predictions for algebras without nilpotent square roots -------------
  for (const std::string id : {"m2_f3", "m2_f5", "e2_f5", "h2_f5"}) {
    const std::string pre = "cor17-" + id + "-";
    const std::string locus = id.starts_with("m2") ? "Proposition 1.8" : "Corollary 1.7";
    const std::string fname = id.ends_with("f5") ? "F_5" : "F_3";
    add({pre + "01-no-root", id, locus, "derived", "no nilpotent element has a square root", "Holds", "", false,
         [id](CorpusContext& ctx) { return verdict_obs(nilpotent_root_check(ctx.model(id), ctx.options()), ctx.fp(id)); }});
    add({pre + "02-rj-predicted", id, "Corollary 1.7", "paper", "predicted: A is an RJ-algebra", "Holds",
         "stated for finite-dimensional algebras; tested over " + fname, true,
         [id](CorpusContext& ctx) { return verdict_obs(rj_check(ctx.model(id), ctx.options()), ctx.fp(id)); }});
    add({pre + "03-bj-predicted", id, "Corollary 2.7", "paper", "predicted: A is a BJ-algebra", "Holds",
         "stated for finite-dimensional algebras; tested over " + fname, true,
         [id](CorpusContext& ctx) { return verdict_obs(bj_check_direct(ctx.model(id), ctx.options()), ctx.fp(id)); }});
  }

  // --- sweeps over the RJ algebras of the corpus --------------------------
  for (const std::string id : {"e2_f3", "e2_f5", "e3_1_f3", "e3_2_f3", "e3_3_f3", "nu_1_f3", "nu_2_f3", "nu_3_f3",
                               "h2_f3", "seq1_h2_f3", "seq2_h2_f3"}) {
    add({"sweep-" + id + "-kernel-complement", id, "Lemma 1.4", "derived",
         "ker U_e n A^2 = U_{1-e}(A) n A^2 for every idempotent e", "true", "", false,
         [id](CorpusContext& ctx) -> Observation {
           auto r = kernel_complement_sweep(ctx.model(id));
           return {tf(r.ok), r.detail};
         }});
    add({"sweep-" + id + "-unit-root", id, "Lemma 1.3", "derived",
         "the idempotent for x = 0 fixes every square and no b^2 is nonzero and nilpotent", "true", "", false,
         [id](CorpusContext& ctx) -> Observation {
           auto r = unit_and_root_sweep(ctx.model(id), ctx.options());
           return {tf(r.ok), r.detail};
         }});
    add({"sweep-" + id + "-unique", id, "Lemma 1.3", "derived", "U_e(A) = U_f(A) forces e = f", "true", "", false,
         [id](CorpusContext& ctx) -> Observation {
           auto r = idempotent_uniqueness_sweep(ctx.model(id));
           return {tf(r.ok), r.detail};
         }});
  }

  // --- octonion matrices ---------------------------------------------------
  add({"albert-01-valid", "albert_q", "§1 Example 1", "derived", "H_3 over the octonions satisfies the Jordan identity",
       "true", "", false, [](CorpusContext& ctx) -> Observation {
         const auto& A = ctx.q("albert_q");
         auto r = validate_jordan(A, ctx.options().budget);
         return {tf(r.valid && A.dim() == 27),
                 "dim " + std::to_string(A.dim()) + ", " + to_string(r.method) + ", " + std::to_string(r.checked) + " quadruples"};
       }});
  add({"albert-02-h4-rejected", "albert_q", "§1 Example 1", "trivial", "H_4 over the octonions is not Jordan", "true",
       "", false, [](CorpusContext& ctx) -> Observation {
         auto r = validate_jordan(hermitian_table_unchecked<Rational>(4, 8, FieldDesc::rationals()), ctx.options().budget);
         bool thrown = false;
         try {
           hermitian_matrix_algebra<Rational>(4, 8, FieldDesc::rationals());
         } catch (const Error& e) {
           thrown = e.code() == ErrorCode::InvalidOctonionSize;
         }
         return {tf(!r.valid && thrown), r.message};
       }});

  std::sort(C.begin(), C.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return C;
}

struct ClaimsReport {
  std::vector<ClaimResult> results;
  std::vector<std::string> notes;
  std::size_t pass = 0, fail = 0, unknown = 0, discrepancy = 0;
  std::vector<Claim> claims;  // owns the claims results point into
};

inline bool claim_selected(const Claim& c, const std::string& filter) {
  if (filter.empty()) return true;
  return c.id == filter || c.id.starts_with(filter) || c.algebra == filter || c.locus.find(filter) != std::string::npos;
}

inline ClaimsReport run_corpus(const std::string& filter = {}, const CheckOptions& opt = {}) {
  ClaimsReport rep;
  for (auto& c : corpus_claims())
    if (claim_selected(c, filter)) rep.claims.push_back(std::move(c));
  CorpusContext ctx(opt);
  rep.results.resize(rep.claims.size());
  parallel_for(0, rep.claims.size(), opt.threads, [&](std::size_t i) {
    auto& r = rep.results[i];
    r.claim = &rep.claims[i];
    try {
      r.obs = rep.claims[i].run(ctx);
    } catch (const Error& e) {
      r.obs = {"error", e.what()};
    }
    if (r.obs.observed == r.claim->expected)
      r.status = ClaimStatus::Pass;
    else if (r.obs.observed == "Unknown")
      r.status = ClaimStatus::Unknown;
    else
      r.status = r.claim->finding ? ClaimStatus::Discrepancy : ClaimStatus::Fail;
  });
  for (const auto& r : rep.results) {
    switch (r.status) {
      case ClaimStatus::Pass: ++rep.pass; break;
      case ClaimStatus::Fail: ++rep.fail; break;
      case ClaimStatus::Unknown: ++rep.unknown; break;
      case ClaimStatus::Discrepancy: ++rep.discrepancy; break;
    }
  }
  rep.notes.push_back(
      "the infinite algebra of eventually-zero sequences in H_n is RJ but not BJ; only finite truncations are built, "
      "and every finite truncation is BJ");
  rep.notes.push_back(
      "H_n over F_p is not formally real, so the Example 1 claims for it are cross-checks; disagreements are listed "
      "as discrepancies");
  rep.notes.push_back("claims stated over R are tested over F_p exhaustively or over Q exactly; see each claim's field note");
  for (const auto& r : rep.results)
    if (r.status == ClaimStatus::Discrepancy)
      rep.notes.push_back("discrepancy: " + r.claim->id + " expected " + r.claim->expected + ", observed " +
                          r.obs.observed + " (" + r.obs.detail + ")");
  return rep;
}

inline json claims_report_to_json(const ClaimsReport& rep) {
  json j;
  j["summary"] = json{{"claims", rep.results.size()},
                      {"pass", rep.pass},
                      {"fail", rep.fail},
                      {"unknown", rep.unknown},
                      {"discrepancy", rep.discrepancy}};
  json arr = json::array();
  for (const auto& r : rep.results) {
    json c;
    c["id"] = r.claim->id;
    c["algebra"] = r.claim->algebra;
    c["locus"] = r.claim->locus;
    c["source"] = r.claim->source;
    c["statement"] = r.claim->statement;
    if (!r.claim->field_note.empty()) c["field"] = r.claim->field_note;
    c["expected"] = r.claim->expected;
    c["observed"] = r.obs.observed;
    c["status"] = to_string(r.status);
    c["detail"] = r.obs.detail;
    arr.push_back(std::move(c));
  }
  j["claims"] = arr;
  j["notes"] = rep.notes;
  return j;
}

}  // namespace jordan
