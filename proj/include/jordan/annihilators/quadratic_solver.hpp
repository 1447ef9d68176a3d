#pragma once

#include "jordan/algebra/algebra.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace jordan {

/// Polynomial of degree <= 2: c + sum l_i x_i + sum_{i<=j} q_ij x_i x_j.
template <FieldScalar S>
class QuadPoly {
 public:
  QuadPoly() = default;
  explicit QuadPoly(S constant) : constant_(std::move(constant)) {}

  const S& constant() const { return constant_; }
  const std::map<std::size_t, S>& linear() const { return linear_; }
  const std::map<std::pair<std::size_t, std::size_t>, S>& quadratic() const { return quad_; }

  void add_constant(const S& c) { constant_ += c; }
  void add_linear(std::size_t i, const S& c) { bump(linear_, i, c); }
  void add_quadratic(std::size_t i, std::size_t j, const S& c) {
    if (i > j) std::swap(i, j);
    bump(quad_, std::pair{i, j}, c);
  }

  bool has_quadratic() const { return !quad_.empty(); }
  bool is_constant() const { return linear_.empty() && quad_.empty(); }

  std::set<std::size_t> variables() const {
    std::set<std::size_t> out;
    for (const auto& [i, c] : linear_) out.insert(i);
    for (const auto& [ij, c] : quad_) {
      out.insert(ij.first);
      out.insert(ij.second);
    }
    return out;
  }

  bool mentions_quadratically(std::size_t v) const {
    for (const auto& [ij, c] : quad_)
      if (ij.first == v || ij.second == v) return true;
    return false;
  }

  S evaluate(std::span<const S> x) const {
    S acc = constant_;
    for (const auto& [i, c] : linear_) acc += c * x[i];
    for (const auto& [ij, c] : quad_) acc += c * x[ij.first] * x[ij.second];
    return acc;
  }

  /// Replaces x_v by the polynomial `expr`, which must keep the degree <= 2
  /// (expr linear, or x_v only linear here).
  QuadPoly substitute(std::size_t v, const QuadPoly& expr) const {
    QuadPoly out(constant_);
    for (const auto& [i, c] : linear_) {
      if (i == v)
        out.add_scaled(expr, c);
      else
        out.add_linear(i, c);
    }
    for (const auto& [ij, c] : quad_) {
      auto [i, j] = ij;
      if (i != v && j != v) {
        out.add_quadratic(i, j, c);
        continue;
      }
      if (expr.has_quadratic()) throw Error(ErrorCode::InvalidArgument, "substitution would raise the degree");
      if (i == v && j == v) {
        // (e0 + sum e_k x_k)^2
        out.add_constant(c * expr.constant_ * expr.constant_);
        for (const auto& [k, ek] : expr.linear_) out.add_linear(k, c * (expr.constant_ + expr.constant_) * ek);
        for (const auto& [k, ek] : expr.linear_)
          for (const auto& [l, el] : expr.linear_)
            if (k <= l) out.add_quadratic(k, l, k == l ? c * ek * el : c * (ek * el + ek * el));
      } else {
        std::size_t other = i == v ? j : i;
        // c x_other (e0 + sum e_k x_k)
        out.add_linear(other, c * expr.constant_);
        for (const auto& [k, ek] : expr.linear_) out.add_quadratic(other, k, c * ek);
      }
    }
    return out;
  }

  void add_scaled(const QuadPoly& o, const S& s) {
    constant_ += s * o.constant_;
    for (const auto& [i, c] : o.linear_) add_linear(i, s * c);
    for (const auto& [ij, c] : o.quad_) add_quadratic(ij.first, ij.second, s * c);
  }

 private:
  template <class Map, class Key>
  static void bump(Map& m, const Key& k, const S& c) {
    if (is_zero(c)) return;
    auto it = m.find(k);
    if (it == m.end()) {
      m.emplace(k, c);
      return;
    }
    it->second += c;
    if (is_zero(it->second)) m.erase(it);
  }

  S constant_{};
  std::map<std::size_t, S> linear_;
  std::map<std::pair<std::size_t, std::size_t>, S> quad_;
};

/// point + span(directions). `exact` is false when the piece is only known to
/// contain its point (a back-substitution was nonlinear along a direction).
template <FieldScalar S>
struct SolutionPiece {
  Vec<S> point;
  std::vector<Vec<S>> directions;
  bool exact = true;
};

template <FieldScalar S>
struct SolveResult {
  std::vector<SolutionPiece<S>> pieces;
  bool complete = true;  // pieces describe the full solution set
};

struct SolverLimits {
  std::size_t max_nodes = 20000;
};

namespace detail {

template <FieldScalar S>
class QuadraticSolver {
 public:
  QuadraticSolver(const FieldDesc& f, std::size_t nvars, SolverLimits limits) : f_(f), n_(nvars), limits_(limits) {}

  SolveResult<S> run(std::vector<QuadPoly<S>> eqs) {
    SolveResult<S> res;
    std::vector<bool> active(n_, true);
    res.pieces = solve(std::move(eqs), active, res.complete);
    return res;
  }

 private:
  using Poly = QuadPoly<S>;
  using Piece = SolutionPiece<S>;

  std::vector<Piece> solve(std::vector<Poly> eqs, std::vector<bool> active, bool& complete) {
    if (++nodes_ > limits_.max_nodes) {
      complete = false;
      return {};
    }
    std::vector<Poly> kept;
    for (auto& e : eqs) {
      if (e.is_constant()) {
        if (!is_zero(e.constant())) return {};
        continue;
      }
      kept.push_back(std::move(e));
    }
    eqs = std::move(kept);
    if (eqs.empty()) return terminal(active);

    // Linear equation: eliminate its first variable (affine back-substitution).
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      if (eqs[k].has_quadratic()) continue;
      auto [v, coeff] = *eqs[k].linear().begin();
      return eliminate(eqs, k, v, coeff, active, complete);
    }

    // Univariate quadratic a x^2 + b x + c.
    for (const auto& e : eqs) {
      auto vars = e.variables();
      if (vars.size() != 1) continue;
      std::size_t v = *vars.begin();
      S a = f_.zero<S>(), b = f_.zero<S>();
      if (auto it = e.quadratic().find({v, v}); it != e.quadratic().end()) a = it->second;
      if (auto it = e.linear().find(v); it != e.linear().end()) b = it->second;
      const S& c = e.constant();
      S disc = b * b - f_.make<S>(4) * a * c;
      auto root = ScalarTraits<S>::sqrt(disc);
      if (!root) return {};
      S inv2a = inverse(f_.make<S>(2) * a);
      std::vector<S> roots{(-b + *root) * inv2a};
      if (!is_zero(*root)) roots.push_back((-b - *root) * inv2a);
      return branch(eqs, v, roots, active, complete);
    }

    // x_i x_j = 0.
    for (const auto& e : eqs) {
      if (!e.linear().empty() || !is_zero(e.constant()) || e.quadratic().size() != 1) continue;
      auto [i, j] = e.quadratic().begin()->first;
      if (i == j) return branch(eqs, i, {f_.zero<S>()}, active, complete);
      auto left = branch(eqs, i, {f_.zero<S>()}, active, complete);
      auto right = branch(eqs, j, {f_.zero<S>()}, active, complete);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }

    // x_i * L(x) = 0 with L linear: x_i = 0, or L = 0 (the pieces may overlap).
    for (const auto& e : eqs) {
      if (!e.linear().empty() || !is_zero(e.constant())) continue;
      for (std::size_t v : e.variables()) {
        Poly factor;
        bool common = true;
        for (const auto& [ij, c] : e.quadratic()) {
          if (ij.first != v && ij.second != v) {
            common = false;
            break;
          }
          std::size_t other = ij.first == v ? ij.second : ij.first;
          factor.add_linear(other, c);
        }
        if (!common) continue;
        auto left = branch(eqs, v, {f_.zero<S>()}, active, complete);
        std::vector<Poly> next = eqs;
        next.push_back(factor);
        auto right = solve(std::move(next), active, complete);
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
    }

    // Over an ordered field, a definite diagonal form equal to zero forces
    // all its variables to vanish.
    if constexpr (ScalarTraits<S>::ordered) {
      for (const auto& e : eqs) {
        if (!e.linear().empty() || !is_zero(e.constant())) continue;
        int sign = 0;
        bool ok = true;
        for (const auto& [ij, c] : e.quadratic()) {
          int s = ScalarTraits<S>::sign(c);
          if (ij.first != ij.second || (sign != 0 && s != sign)) {
            ok = false;
            break;
          }
          sign = s;
        }
        if (!ok) continue;
        std::vector<Poly> next = eqs;
        for (const auto& [ij, c] : e.quadratic()) {
          Poly z;
          z.add_linear(ij.first, f_.one<S>());
          next.push_back(z);
        }
        return solve(std::move(next), active, complete);
      }
    }

    // A variable that is never squared or multiplied: solve for it.
    for (std::size_t v = 0; v < n_; ++v) {
      if (!active[v]) continue;
      bool quadratic_somewhere = false;
      std::optional<std::size_t> host;
      for (std::size_t k = 0; k < eqs.size(); ++k) {
        if (eqs[k].mentions_quadratically(v)) quadratic_somewhere = true;
        if (!host && eqs[k].linear().count(v)) host = k;
      }
      if (quadratic_somewhere || !host) continue;
      return eliminate(eqs, *host, v, eqs[*host].linear().at(v), active, complete);
    }

    // Stuck: branch on the most frequent variable. Exhaustive over small
    // prime fields, a heuristic sample otherwise.
    std::map<std::size_t, std::size_t> freq;
    for (const auto& e : eqs)
      for (auto v : e.variables()) ++freq[v];
    std::size_t best = freq.begin()->first;
    for (const auto& [v, c] : freq)
      if (c > freq[best]) best = v;
    std::vector<S> values;
    if constexpr (std::is_same_v<S, ModP>) {
      if (f_.p <= 7) {
        for (std::uint32_t r = 0; r < f_.p; ++r) values.push_back(f_.make<S>(r));
      } else {
        complete = false;
      }
    } else {
      complete = false;
    }
    if (values.empty()) {
      for (std::int64_t num : {0, 1, -1, 2, -2}) values.push_back(f_.make<S>(num));
      values.push_back(inverse(f_.make<S>(2)));
      values.push_back(-inverse(f_.make<S>(2)));
    }
    return branch(eqs, best, values, active, complete);
  }

  std::vector<Piece> branch(const std::vector<Poly>& eqs, std::size_t v, const std::vector<S>& values,
                            const std::vector<bool>& active, bool& complete) {
    std::vector<Piece> out;
    for (const auto& val : values) {
      Poly expr(val);
      std::vector<Poly> next;
      next.reserve(eqs.size());
      for (const auto& e : eqs) next.push_back(e.substitute(v, expr));
      auto act = active;
      act[v] = false;
      auto pieces = solve(std::move(next), act, complete);
      for (auto& p : pieces) {
        back_substitute(p, v, expr);
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  std::vector<Piece> eliminate(const std::vector<Poly>& eqs, std::size_t k, std::size_t v, const S& coeff,
                               const std::vector<bool>& active, bool& complete) {
    // x_v = -(eq - coeff x_v) / coeff
    Poly expr;
    S scale = -inverse(coeff);
    expr.add_scaled(eqs[k], scale);
    expr.add_linear(v, f_.one<S>());
    std::vector<Poly> next;
    for (std::size_t i = 0; i < eqs.size(); ++i)
      if (i != k) next.push_back(eqs[i].substitute(v, expr));
    auto act = active;
    act[v] = false;
    auto pieces = solve(std::move(next), act, complete);
    std::vector<Piece> out;
    for (auto& p : pieces) {
      back_substitute(p, v, expr);
      if (!p.exact) complete = false;
      out.push_back(std::move(p));
    }
    return out;
  }

  /// Free variables of a terminal node become directions.
  std::vector<Piece> terminal(const std::vector<bool>& active) {
    Piece p{zero_vec<S>(f_, n_), {}, true};
    for (std::size_t v = 0; v < n_; ++v) {
      if (!active[v]) continue;
      Vec<S> d = zero_vec<S>(f_, n_);
      d[v] = f_.one<S>();
      p.directions.push_back(std::move(d));
    }
    return {p};
  }

  void back_substitute(Piece& p, std::size_t v, const Poly& expr) {
    S base = expr.evaluate(p.point);
    for (auto& d : p.directions) {
      Vec<S> p1 = p.point, p2 = p.point;
      for (std::size_t i = 0; i < n_; ++i) {
        p1[i] += d[i];
        p2[i] += d[i] + d[i];
      }
      S e1 = expr.evaluate(p1), e2 = expr.evaluate(p2);
      if (!is_zero(e2 - e1 - e1 + base)) p.exact = false;
      d[v] = e1 - base;
    }
    if (expr.has_quadratic() && p.directions.size() > 1) {
      for (std::size_t a = 0; a < p.directions.size() && p.exact; ++a)
        for (std::size_t b = a + 1; b < p.directions.size(); ++b) {
          Vec<S> pa = p.point, pb = p.point, pab = p.point;
          for (std::size_t i = 0; i < n_; ++i) {
            pa[i] += p.directions[a][i];
            pb[i] += p.directions[b][i];
            pab[i] += p.directions[a][i] + p.directions[b][i];
          }
          if (!is_zero(expr.evaluate(pab) - expr.evaluate(pa) - expr.evaluate(pb) + base)) {
            p.exact = false;
            break;
          }
        }
    }
    p.point[v] = base;
  }

  FieldDesc f_;
  std::size_t n_;
  SolverLimits limits_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Solves a system of polynomial equations of degree <= 2 by propagation:
/// linear elimination, univariate roots, zero products, definite forms, and
/// finally branching on values. `complete` reports whether the returned
/// pieces are the whole solution set.
template <FieldScalar S>
SolveResult<S> solve_quadratic_system(const FieldDesc& f, std::size_t nvars, std::vector<QuadPoly<S>> eqs,
                                      SolverLimits limits = {}) {
  detail::QuadraticSolver<S> solver(f, nvars, limits);
  return solver.run(std::move(eqs));
}

/// Equations  B(z, z) = target  where B is the symmetric bilinear map given on
/// basis pairs by `form(j, k)`; unknown z has A.dim() coordinates.
template <FieldScalar S, class Form>
std::vector<QuadPoly<S>> quadratic_form_equations(const JordanAlgebra<S>& A, Form&& form, const Vec<S>& target) {
  const std::size_t n = A.dim();
  std::vector<QuadPoly<S>> eqs(A.dim(), QuadPoly<S>(A.scalar(0)));
  for (std::size_t m = 0; m < target.size(); ++m) eqs[m].add_constant(-target[m]);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) {
      Element<S> v = form(j, k);
      if (j != k) v = v + form(k, j);
      for (std::size_t m = 0; m < n; ++m)
        if (!is_zero(v[m])) eqs[m].add_quadratic(j, k, v[m]);
    }
  return eqs;
}

}  // namespace jordan
