// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "jordan/jordan.hpp"
#include "brute.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace jordan;
using jordan::testing::Brute;
using Clock = std::chrono::steady_clock;

namespace {

const FieldDesc F3 = FieldDesc::prime(3);

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome_ {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "violated: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

std::vector<std::string> fp_corpus_ids() {
  std::vector<std::string> out;
  for (const auto& a : corpus_algebras())
    if (std::holds_alternative<JordanAlgebra<ModP>>(a.algebra)) out.push_back(a.id);
  return out;
}

const JordanAlgebra<ModP>& fp(const CorpusContext& ctx, const std::string& id) { return ctx.fp(id); }

// Nonzero b^2 that is nilpotent, scanning in index order.
std::optional<std::uint64_t> first_nilpotent_square(const FiniteModel& M) {
  const auto& A = M.algebra();
  for (std::uint64_t i = 0; i < M.size(); ++i) {
    auto s = A.square(M.element(i));
    if (s.is_zero()) continue;
    auto t = s;
    for (std::size_t k = 0; k <= A.dim() + 1; ++k) t = A.mul(t, s);
    if (t.is_zero()) return i;
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------

void c1(Outcome_& o) {
  auto t0 = Clock::now();
  auto rep = run_corpus();
  const double secs = seconds_since(t0);
  std::size_t sourced = 0, sourced_pass = 0, findings = 0;
  for (const auto& r : rep.results) {
    if (r.claim->source != "paper") continue;
    ++sourced;
    if (r.status == ClaimStatus::Pass) ++sourced_pass;
    if (r.claim->finding) {
      ++findings;
      o.require(r.status == ClaimStatus::Pass || r.status == ClaimStatus::Discrepancy, r.claim->id + " not settled");
    } else {
      o.require(r.status == ClaimStatus::Pass, r.claim->id + " is " + to_string(r.status));
    }
  }
  for (const char* family : {"ex2-", "ex3-", "rem1-", "rem2-", "s2ex1-", "s2ex2-", "s2ex3-"}) {
    std::size_t n = 0;
    for (const auto& r : rep.results)
      if (r.claim->id.starts_with(family)) {
        ++n;
        o.require(r.status == ClaimStatus::Pass, r.claim->id + " is " + to_string(r.status));
      }
    o.require(n > 0, std::string("no claims for ") + family);
  }
  o.require(rep.fail == 0, std::to_string(rep.fail) + " failing claims");
  o.require(secs <= 60.0, "corpus took " + std::to_string(secs) + " s");
  o.detail << (o.ok ? "" : "; ") << sourced_pass << "/" << sourced << " source=paper claims pass, " << findings
           << " are field cross-checks (" << rep.discrepancy << " discrepancies reported), " << rep.results.size()
           << " claims in " << std::fixed << std::setprecision(1) << secs << " s";
}

void c2(Outcome_& o, const CorpusContext& ctx) {
  std::size_t n = 0;
  for (const auto& id : fp_corpus_ids()) {
    const auto& A = fp(ctx, id);
    if (A.field().p != 3) continue;
    const auto& M = ctx.model(id);
    auto direct = bj_check_direct(M).outcome(), lattice = bj_check_via_t25(M).outcome();
    o.require(direct == lattice, id + ": direct " + to_string(direct) + ", via lattice " + to_string(lattice));
    ++n;
  }
  const auto ids = ctx.ids();
  for (const char* need : {"e2_f3", "e3_2_f3", "nu_2_f3", "nu_3_f3", "h2_f3", "m2_f3", "seq2_h2_f3"})
    o.require(std::find(ids.begin(), ids.end(), need) != ids.end(), std::string("missing ") + need);
  o.detail << (o.ok ? "" : "; ") << n << " F_3 algebras, zero disagreements required";
}

void c3(Outcome_& o, const CorpusContext& ctx) {
  std::size_t algebras = 0, idems = 0;
  for (const auto& id : fp_corpus_ids()) {
    const auto& M = ctx.model(id);
    if (rj_check(M).outcome() != Outcome::Holds) continue;
    ++algebras;
    const auto& A = M.algebra();
    for (auto ei : M.idempotents()) {
      ++idems;
      const auto e = M.element(ei);
      std::vector<char> lhs(M.size(), 0), rhs(M.size(), 0);
      for (std::uint64_t i = 0; i < M.size(); ++i) {
        const auto y = M.element(i);
        if (A.u(e, y).is_zero() && M.is_square(i)) lhs[i] = 1;
        // U_{1-e} y = y - 2 e.y + U_e y
        const auto z = y - A.scalar(2) * A.mul(e, y) + A.u(e, y);
        const auto zi = M.index(z);
        if (M.is_square(zi)) rhs[zi] = 1;
      }
      o.require(lhs == rhs, id + " at e = " + A.format(e));
    }
  }
  o.detail << (o.ok ? "" : "; ") << idems << " idempotents in " << algebras << " RJ algebras";
}

void c4(Outcome_& o, const CorpusContext& ctx) {
  std::size_t algebras = 0;
  for (const auto& id : fp_corpus_ids()) {
    const auto& M = ctx.model(id);
    auto rj = rj_check(M);
    if (rj.outcome() != Outcome::Holds) continue;
    ++algebras;
    const auto& A = M.algebra();
    o.require(!rj.idempotent_map.empty() && rj.idempotent_map.front().first.is_zero(), id + ": no map entry for 0");
    if (rj.idempotent_map.empty()) continue;
    const auto u = rj.idempotent_map.front().second;
    for (auto s : M.squares()) {
      const auto x = M.element(s);
      if (A.mul(u, x) != x) {
        o.require(false, id + ": " + A.format(u) + " moves the square " + A.format(x));
        break;
      }
    }
    auto bad = first_nilpotent_square(M);
    o.require(!bad, id + ": nilpotent square of " + (bad ? A.format(M.element(*bad)) : ""));
  }
  const auto& M3 = ctx.model("m3_f3");
  const auto& A = M3.algebra();
  auto first = first_nilpotent_square(M3);
  auto nr = nilpotent_root_check(M3);
  o.require(first.has_value(), "M_3(F_3): no nilpotent square found");
  o.require(nr.outcome() == Outcome::Fails && nr.verdict.witness, "M_3(F_3): nilpotent_root_check does not fail");
  if (first && nr.verdict.witness) {
    const auto b = M3.element(*first);
    o.require(nr.verdict.witness->elements.at(0) == b, "M_3(F_3) witness is not the first element in index order");
    o.require(verify_witness(A, Property::RJ, *nr.verdict.witness).ok, "M_3(F_3) witness does not verify");
    // same family as the nilpotent matrices of the example: b^2 nonzero and square-zero
    const auto s = A.square(b);
    o.require(!s.is_zero() && A.square(s).is_zero(), "M_3(F_3) witness square is not square-zero");
    o.detail << (o.ok ? "" : "; ") << algebras << " RJ algebras clean; M_3(F_3) b = " << A.format(b)
             << ", b^2 = " << A.format(s);
  }
}

void c5(Outcome_& o) {
  for (const auto& A : {example2<ModP>(F3), example3<ModP>(2, F3)}) {
    auto d = deg_radical(A);
    o.require(!d.subspace.is_zero(), A.name() + ": Deg is zero");
    auto Qt = quotient(A, d.subspace);
    o.require(rj_check(Qt.algebra).outcome() == Outcome::Holds, A.name() + ": quotient not RJ");
    o.require(bj_check_direct(Qt.algebra).outcome() == Outcome::Holds, A.name() + ": quotient not BJ");
    o.require(rj_check(A).outcome() == Outcome::Holds, A.name() + ": not RJ");
    o.require(bj_check_direct(A).outcome() == Outcome::Holds, A.name() + ": not BJ");
    o.detail << (o.detail.tellp() > 0 ? "; " : "") << A.name() << " Deg dim " << d.subspace.rank() << ", quotient dim "
             << Qt.algebra.dim();
  }
}

void c6(Outcome_& o) {
  for (const auto& A : {example2<ModP>(F3), example3<ModP>(2, F3)}) {
    std::vector<Vec<ModP>> rows;
    for (std::size_t i = 1; i < A.dim(); ++i) rows.push_back(A.basis(i).coords());
    const auto G = Subspace<ModP>::span(A.field(), A.dim(), rows);
    auto d = deg_radical(A), n = nil_radical(A), r = jacobson_radical(A);
    o.require(d.subspace == G, A.name() + ": Deg differs from the generators");
    o.require(n.subspace == G, A.name() + ": Nil differs from the generators");
    o.require(r.subspace == G, A.name() + ": Rad differs from the generators");
    o.require(n.method == "ideal-enumeration" && r.method == "ideal-enumeration", A.name() + ": not ideal enumeration");
    Brute B(A);
    o.require(B.members(G) == B.deg() && B.members(G) == B.nil() && B.members(G) == B.rad(),
              A.name() + ": brute-force radicals differ");
    FiniteModel M(A);
    o.require(M.squares_in(d.subspace).count() == 1, A.name() + ": Deg meets the squares");
  }
  o.detail << (o.ok ? "" : "; ") << "E2, E3(2) over F_3";
}

void c7(Outcome_& o, const CorpusContext& ctx, const ClaimsReport& rep) {
  for (const auto& id : {std::string("m2_f3"), std::string("m2_f5")}) {
    const auto& M = ctx.model(id);
    auto bad = first_nilpotent_square(M);
    o.require(!bad, id + ": nilpotent element with a square root");
    auto rj = rj_check(M).outcome();
    const std::string claim = "cor17-" + id + "-02-rj-predicted";
    const ClaimResult* cr = nullptr;
    for (const auto& r : rep.results)
      if (r.claim->id == claim) cr = &r;
    o.require(cr != nullptr, claim + " missing");
    if (cr) {
      // any disagreement with the prediction must be visible as a discrepancy
      if (rj != Outcome::Holds) {
        o.require(cr->status == ClaimStatus::Discrepancy, claim + " disagrees silently");
        bool noted = false;
        for (const auto& n : rep.notes) noted = noted || n.find(claim) != std::string::npos;
        o.require(noted, claim + " not in the report notes");
      } else {
        o.require(cr->status == ClaimStatus::Pass, claim + " status " + to_string(cr->status));
      }
    }
    o.detail << (o.detail.tellp() > 0 ? "; " : "") << id << ": no nilpotent root in " << M.size()
             << " elements, rj " << to_string(rj) << (rj != Outcome::Holds ? " (discrepancy recorded)" : "");
  }
}

void c8(Outcome_& o) {
  auto t0 = Clock::now();
  auto A = hermitian_matrix_algebra<Rational>(3, 8, FieldDesc::rationals());
  auto rep = validate_jordan(A);
  const double secs = seconds_since(t0);
  o.require(A.dim() == 27, "dim " + std::to_string(A.dim()));
  o.require(rep.valid, "validation failed: " + rep.message);
  o.require(rep.method == ValidationReport::Method::Linearized, "not the linearized identity");
  o.require(secs <= 120.0, "took " + std::to_string(secs) + " s");
  o.detail << (o.ok ? "" : "; ") << "dim 27, " << to_string(rep.method) << ", " << rep.checked << " quadruples, "
           << std::fixed << std::setprecision(1) << secs << " s";
}

void c9(Outcome_& o) {
  std::size_t rj = 0, rickart = 0, baer = 0, bj = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto rs = random_special_algebra<ModP>(seed, F3, 4);
    const auto& A = rs.algebra;
    const std::string tag = "seed " + std::to_string(seed);
    FiniteModel M(A);
    const bool is_rj = rj_check(M).outcome() == Outcome::Holds;
    const bool is_bj = bj_check_direct(M).outcome() == Outcome::Holds;
    const bool is_rickart = rickart_check(M).outcome() == Outcome::Holds;
    const bool is_baer = baer_check(M).outcome() == Outcome::Holds;
    rj += is_rj;
    bj += is_bj;
    rickart += is_rickart;
    baer += is_baer;
    o.require(!is_rickart || is_rj, tag + ": Rickart but not RJ");
    o.require(!is_baer || is_bj, tag + ": Baer but not BJ");
    o.require(!is_rj || quad_nondeg_check(M).outcome() == Outcome::Holds, tag + ": RJ but quadratically degenerate");
    Brute B(A);
    o.require(is_rj == B.rj() && is_bj == B.bj() && is_rickart == B.rickart() && is_baer == B.baer(),
              tag + ": deciders disagree with brute force");
    if (is_rj)
      for (std::size_t x = 0; x < B.el.size(); ++x) {
        const auto target = B.meet_squares(B.left(x));
        std::size_t matches = 0;
        for (auto e : B.idem) matches += B.meet_squares(B.image_of_u(e)) == target;
        if (matches != 1) {
          o.require(false, tag + ": " + std::to_string(matches) + " idempotents for " + A.format(B.el[x]));
          break;
        }
      }
    // U_a x = axa in the ambient matrices
    const std::size_t n = rs.matrix_size;
    auto mm = [&](const Vec<ModP>& p, const Vec<ModP>& q) {
      Vec<ModP> r = zero_vec<ModP>(A.field(), n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t j = 0; j < n; ++j) r[i * n + j] += p[i * n + k] * q[k * n + j];
      return r;
    };
    for (std::size_t a = 0; a < B.el.size(); a += 7)
      for (std::size_t x = 0; x < B.el.size(); x += 5) {
        const auto ma = rs.matrix_of(B.el[a]);
        if (rs.matrix_of(A.u(B.el[a], B.el[x])) != mm(mm(ma, rs.matrix_of(B.el[x])), ma)) {
          o.require(false, tag + ": U_a x != axa");
          a = B.el.size();
          break;
        }
      }
  }
  o.detail << (o.ok ? "" : "; ") << "100 seeds: " << rj << " RJ, " << bj << " BJ, " << rickart << " Rickart, " << baer
           << " Baer";
}

void c10(Outcome_& o) {
  auto run = [](std::size_t threads) {
    CheckOptions opt;
    opt.threads = threads;
    std::string out = dump(claims_report_to_json(run_corpus({}, opt)));
    for (const auto& a : corpus_algebras()) {
      if (!std::holds_alternative<JordanAlgebra<ModP>>(a.algebra)) continue;
      const auto& A = std::get<JordanAlgebra<ModP>>(a.algebra);
      for (auto p : {Property::RJ, Property::BJ, Property::RickartJordan, Property::BaerJordan})
        out += dump(report_to_json(A, check_property(A, p, opt)));
    }
    return out;
  };
  const auto one = run(1), four = run(4);
  o.require(one == four, "reports differ between 1 and 4 threads");
  o.detail << (o.ok ? "" : "; ") << one.size() << " bytes identical for 1 and 4 threads";
}

}  // namespace

int main() {
  CorpusContext ctx;
  const auto corpus = run_corpus();
  std::vector<std::pair<int, std::function<void(Outcome_&)>>> criteria{
      {1, c1},
      {2, [&](Outcome_& o) { c2(o, ctx); }},
      {3, [&](Outcome_& o) { c3(o, ctx); }},
      {4, [&](Outcome_& o) { c4(o, ctx); }},
      {5, c5},
      {6, c6},
      {7, [&](Outcome_& o) { c7(o, ctx, corpus); }},
      {8, c8},
      {9, c9},
      {10, c10},
  };
  int failed = 0;
  for (auto& [n, fn] : criteria) {
    Outcome_ o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << " - " << o.detail.str() << std::endl;
    failed += !o.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria pass") << std::endl;
  return failed ? 1 : 0;
}
