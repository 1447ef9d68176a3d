#include "jordan/jordan.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

namespace fs = std::filesystem;
using namespace jordan;

namespace {

struct Flags {
  std::uint64_t budget = kDefaultBudget;
  std::string mode = "auto";
  unsigned threads = 1;
  bool json_out = false;
  bool timing = false;
  std::uint64_t seed = 0;
};

// Exit codes.
constexpr int kHolds = 0, kFails = 1, kUnknown = 2, kUsage = 3;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("JORDAN_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring JORDAN_BUDGET=" << env << "\n";
    }
  }
  return kDefaultBudget;
}

CheckOptions options(const Flags& f) {
  CheckOptions o;
  o.budget = f.budget;
  o.mode = mode_from_string(f.mode);
  o.threads = std::max(1u, f.threads);
  return o;
}

void emit(const Flags& f, json j, const std::string& text, double ms) {
  if (f.json_out) {
    if (f.timing) j["timing_ms"] = ms;
    std::cout << dump(j);
  } else {
    std::cout << text;
    if (f.timing) std::cout << "time: " << ms << " ms\n";
  }
}

template <FieldScalar S>
std::string basis_text(const JordanAlgebra<S>& A, const Subspace<S>& V) {
  std::string out = "dim " + std::to_string(V.rank());
  for (const auto& b : V.basis()) out += "\n  " + A.format(Element<S>(b));
  return out + "\n";
}

template <FieldScalar S>
std::vector<Element<S>> parse_elements(const JordanAlgebra<S>& A, const std::string& text, const std::string& flag) {
  auto j = parse_json_text(text, flag);
  if (!j.is_array()) throw Error(ErrorCode::ParseError, flag + ": expected a list of coordinate vectors");
  // A single vector is accepted as a one-element list.
  if (!j.empty() && !j[0].is_array()) j = json::array({j});
  std::vector<Element<S>> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(element_from_json<S>(A.field(), A.dim(), j[i], flag + "[" + std::to_string(i) + "]"));
  return out;
}

template <class Fn>
double timed(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

int cmd_validate(const Flags& f, const AnyAlgebra& any) {
  ValidationReport r;
  double ms = timed([&] { std::visit([&](const auto& A) { r = validate_jordan(A, f.budget); }, any); });
  json j;
  j["algebra"] = std::visit([](const auto& A) { return A.name(); }, any);
  j["valid"] = r.valid;
  j["method"] = to_string(r.method);
  j["checked"] = r.checked;
  if (!r.valid) {
    j["violation"] = r.violation_kind;
    j["tuple"] = r.tuple;
    j["witness"] = r.witness;
    j["message"] = r.message;
  }
  std::string text = std::string(r.valid ? "valid" : "invalid") + " (" + to_string(r.method) + ", " +
                     std::to_string(r.checked) + " checked)\n";
  if (!r.valid) text += r.message + "\n";
  emit(f, j, text, ms);
  return r.valid ? kHolds : kFails;
}

template <FieldScalar S>
int cmd_info(const Flags& f, const JordanAlgebra<S>& A) {
  const auto opt = options(f);
  json j;
  std::string text;
  double ms = timed([&] {
    j["algebra"] = A.name();
    j["field"] = field_to_json(A.field());
    j["dim"] = A.dim();
    j["basis"] = A.labels();
    const auto unit = A.unit() ? A.unit() : detect_unit(A);
    if (unit) j["unit"] = element_to_json(*unit);
    const bool ex = exhaustive_mode(A, opt);
    j["mode"] = ex ? "exhaustive" : "symbolic";
    text = A.name() + ": dim " + std::to_string(A.dim()) + " over " + field_suffix(A.field()) + "\n";
    text += "unit: " + (unit ? A.format(*unit) : std::string("none")) + "\n";
    auto sq = squares_set(A, opt);
    j["squares_span"] = subspace_to_json(sq.span);
    text += "span of squares: dim " + std::to_string(sq.span.rank()) + "\n";
    if (sq.kind == SquaresSet<S>::Kind::Exhaustive) {
      j["elements"] = checked_pow(A.field().p, A.dim());
      j["squares"] = sq.elements.size();
      text += "elements: " + std::to_string(checked_pow(A.field().p, A.dim())) + ", squares: " +
              std::to_string(sq.elements.size()) + "\n";
    }
    auto E = idempotents(A, opt);
    json ej = json::array();
    for (const auto& e : E.elements) ej.push_back(element_to_json(e));
    j["idempotents"] = ej;
    j["idempotents_complete"] = E.complete;
    text += "idempotents (" + std::string(E.complete ? "complete" : "partial") + "):";
    for (const auto& e : E.elements) text += " " + A.format(e);
    text += "\n";
  });
  emit(f, j, text, ms);
  return kHolds;
}

template <FieldScalar S>
std::string report_text(const JordanAlgebra<S>& A, const ClassReport<S>& r) {
  std::string t = to_string(r.property) + ": " + to_string(r.outcome()) + " [" + r.verdict.method + ", " +
                  to_string(r.mode) + "]\n";
  if (!r.verdict.reason.empty()) t += "reason: " + r.verdict.reason + "\n";
  if (r.verdict.witness) {
    t += "witness (" + r.verdict.witness->kind + "):";
    for (const auto& e : r.verdict.witness->elements) t += " " + A.format(e);
    t += "\n";
    if (!r.verdict.witness->note.empty()) t += "  " + r.verdict.witness->note + "\n";
  }
  for (const auto& [x, e] : r.idempotent_map) t += "  " + A.format(x) + " -> " + A.format(e) + "\n";
  for (const auto& n : r.notes) t += "note: " + n + "\n";
  return t;
}

template <FieldScalar S>
int cmd_check(const Flags& f, const JordanAlgebra<S>& A, const std::string& prop) {
  const auto opt = options(f);
  ClassReport<S> r;
  double ms = timed([&] { r = check_property(A, property_from_string(prop), opt); });
  emit(f, report_to_json(A, r), report_text(A, r), ms);
  return exit_code(r.outcome());
}

/// Re-checks the witness or idempotent map of a saved report.
template <FieldScalar S>
int cmd_verify(const Flags& f, const JordanAlgebra<S>& A, const std::string& path) {
  const auto opt = options(f);
  const json rep = parse_json_text(read_file(path), path);
  if (!rep.contains("property") || !rep.contains("verdict"))
    throw Error(ErrorCode::ParseError, path + ": expected a check report");
  const Property prop = property_from_string(rep["property"].get<std::string>());
  const auto& v = rep["verdict"];
  const std::string outcome = v.value("outcome", "");
  WitnessCheck c{false, "report carries nothing to verify"};
  if (outcome == "Fails" && v.contains("witness")) {
    c = verify_witness(A, prop, witness_from_json<S>(A.field(), A.dim(), v["witness"]), opt);
  } else if (outcome == "Holds" && rep.contains("idempotent_map")) {
    std::vector<std::pair<Element<S>, Element<S>>> map;
    for (std::size_t i = 0; i < rep["idempotent_map"].size(); ++i) {
      const auto& m = rep["idempotent_map"][i];
      const std::string where = "idempotent_map[" + std::to_string(i) + "]";
      map.emplace_back(element_from_json<S>(A.field(), A.dim(), m.at("x"), where + ".x"),
                       element_from_json<S>(A.field(), A.dim(), m.at("e"), where + ".e"));
    }
    c = verify_idempotent_map(A, prop, map, opt);
  } else if (outcome == "Holds") {
    c = {false, "Holds report without an idempotent map; rerun check to confirm"};
  }
  json j{{"report", path}, {"property", to_string(prop)}, {"verified", c.ok}, {"message", c.message}};
  emit(f, j, std::string(c.ok ? "verified: " : "rejected: ") + c.message + "\n", 0);
  if (c.ok) return kHolds;
  return c.message.starts_with("report carries") || c.message.starts_with("Holds report") ? kUnknown : kFails;
}

template <FieldScalar S>
int cmd_annihilator(const Flags& f, const JordanAlgebra<S>& A, const std::string& set_text) {
  const auto opt = options(f);
  const auto set = parse_elements(A, set_text, "--set");
  json j;
  std::string text;
  double ms = timed([&] {
    const auto L = left_annihilator(A, set);
    j["algebra"] = A.name();
    json sj = json::array();
    for (const auto& x : set) sj.push_back(element_to_json(x));
    j["set"] = sj;
    j["left"] = subspace_to_json(L);
    text = "⊥S: " + basis_text(A, L);
    if constexpr (std::is_same_v<S, ModP>) {
      if (exhaustive_mode(A, opt)) {
        FiniteModel M(A, opt.budget, opt.threads);
        j["left_squares"] = M.squares_in(L).count();
        const auto R = right_annihilator(A, set, opt);
        json rj = json::array();
        for (const auto& x : R) rj.push_back(element_to_json(x));
        j["right"] = rj;
        text += "squares in ⊥S: " + std::to_string(M.squares_in(L).count()) + "\n";
        text += "S^⊥: " + std::to_string(R.size()) + " elements\n";
      }
    }
  });
  emit(f, j, text, ms);
  return kHolds;
}

template <FieldScalar S>
int cmd_radical(const Flags& f, const JordanAlgebra<S>& A, const std::string& kind) {
  const auto opt = options(f);
  RadicalReport<S> r;
  double ms = timed([&] {
    if (kind == "deg")
      r = deg_radical(A, opt);
    else if (kind == "nil")
      r = nil_radical(A, opt);
    else if (kind == "rad")
      r = jacobson_radical(A, opt);
    else
      throw Error(ErrorCode::InvalidArgument, "unknown radical '" + kind + "'");
  });
  json j;
  j["algebra"] = A.name();
  j["radical"] = to_string(r.kind);
  j["method"] = r.method;
  j["subspace"] = subspace_to_json(r.subspace);
  j["verification"] = verdict_to_json(r.verification);
  if (!r.notes.empty()) j["notes"] = r.notes;
  std::string text = to_string(r.kind) + " [" + r.method + "]: " + basis_text(A, r.subspace) +
                     "verification: " + to_string(r.verification.outcome) + "\n";
  for (const auto& n : r.notes) text += "note: " + n + "\n";
  emit(f, j, text, ms);
  return exit_code(r.verification.outcome);
}

template <FieldScalar S>
int cmd_lattice(const Flags& f, const JordanAlgebra<S>& A) {
  const auto opt = options(f);
  IdemLattice<S> L;
  double ms = timed([&] { L = idempotent_lattice(A, opt); });
  json j;
  j["algebra"] = A.name();
  json els = json::array();
  for (const auto& e : L.elements) els.push_back(element_to_json(e));
  j["idempotents"] = els;
  j["elements_complete"] = L.elements_complete;
  j["partial_order"] = L.partial_order;
  j["complete"] = L.complete;
  json covers = json::array();
  for (std::size_t a = 0; a < L.elements.size(); ++a)
    for (std::size_t b = 0; b < L.elements.size(); ++b)
      if (a != b && L.le(a, b)) covers.push_back(json::array({a, b}));
  j["order"] = covers;
  if (L.top) j["top"] = *L.top;
  if (L.bottom) j["bottom"] = *L.bottom;
  if (!L.complete && !L.missing_bound.empty()) {
    j["missing"] = json{{"kind", L.missing_kind}, {"subset", L.missing_bound}};
  }
  if (L.recipe_agrees) j["recipe_agrees"] = *L.recipe_agrees;
  if (!L.notes.empty()) j["notes"] = L.notes;
  std::string text = std::to_string(L.elements.size()) + " idempotents (" + L.method + ")\n";
  for (std::size_t i = 0; i < L.elements.size(); ++i) text += "  [" + std::to_string(i) + "] " + A.format(L.elements[i]) + "\n";
  text += std::string("complete lattice: ") + (L.complete ? "yes" : "no") + "\n";
  for (const auto& n : L.notes) text += "note: " + n + "\n";
  emit(f, j, text, ms);
  return L.complete ? kHolds : kFails;
}

template <FieldScalar S>
int cmd_peirce(const Flags& f, const JordanAlgebra<S>& A, const std::string& e_text) {
  const auto es = parse_elements(A, e_text, "--idempotent");
  if (es.size() != 1) throw Error(ErrorCode::InvalidArgument, "--idempotent takes one vector");
  PeirceDecomposition<S> d;
  double ms = timed([&] { d = peirce(A, es[0]); });
  json j;
  j["algebra"] = A.name();
  j["idempotent"] = element_to_json(es[0]);
  j["A1"] = subspace_to_json(d.one);
  j["A1/2"] = subspace_to_json(d.half);
  j["A0"] = subspace_to_json(d.zero);
  j["hull_lifted"] = d.hull_lifted;
  std::string text = "A_1: " + basis_text(A, d.one) + "A_1/2: " + basis_text(A, d.half) + "A_0: " + basis_text(A, d.zero);
  emit(f, j, text, ms);
  return kHolds;
}

int cmd_corpus_run(const Flags& f, const std::string& filter) {
  ClaimsReport rep;
  double ms = timed([&] { rep = run_corpus(filter, options(f)); });
  std::string text;
  for (const auto& r : rep.results)
    text += to_string(r.status) + "  " + r.claim->id + "  [" + r.claim->locus + "]  expected " + r.claim->expected +
            ", observed " + r.obs.observed + "\n";
  text += std::to_string(rep.results.size()) + " claims: " + std::to_string(rep.pass) + " pass, " +
          std::to_string(rep.fail) + " fail, " + std::to_string(rep.unknown) + " unknown, " +
          std::to_string(rep.discrepancy) + " discrepancy\n";
  for (const auto& n : rep.notes) text += "note: " + n + "\n";
  emit(f, claims_report_to_json(rep), text, ms);
  return rep.fail == 0 ? kHolds : kFails;
}

int cmd_corpus_export(const std::string& dir) {
  fs::create_directories(dir);
  for (const auto& a : corpus_algebras()) {
    const auto path = (fs::path(dir) / (a.id + ".json")).string();
    save_algebra(a.algebra, path);
    std::cout << path << "\n";
  }
  return kHolds;
}

template <class Fn>
int with_algebra(const std::string& path, Fn&& fn) {
  const AnyAlgebra any = load_algebra(path);
  return std::visit([&](const auto& A) { return fn(A); }, any);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide RJ, BJ, Rickart and Baer properties of finite-dimensional Jordan algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  f.budget = default_budget();
  app.add_option("--budget", f.budget, "max number of enumerated elements p^dim (default 10^6, env JORDAN_BUDGET)");
  app.add_option("--mode", f.mode, "exhaustive, symbolic or auto")->check(CLI::IsMember({"auto", "exhaustive", "symbolic"}));
  app.add_option("--threads", f.threads, "worker threads; output does not depend on it");
  app.add_option("--seed", f.seed, "seed for random constructions");
  app.add_flag("--json", f.json_out, "machine-readable output");
  app.add_flag("--timing", f.timing, "add wall-clock time to the output");

  std::string file, property = "rj", verify_path, set_text, radical_kind = "deg", idem_text, filter, out_dir = "data/corpus";
  std::size_t random_dim = 4;
  std::uint32_t random_p = 3;

  auto* validate = app.add_subcommand("validate", "check commutativity, the Jordan identity and the unit");
  validate->add_option("file", file, "algebra file")->required();
  auto* info = app.add_subcommand("info", "dimension, unit, squares and idempotents");
  info->add_option("file", file)->required();
  auto* check = app.add_subcommand("check", "decide a property");
  check->add_option("--property", property, "rj, bj, bj-lattice, rickart, baer, nondeg, quad-nondeg, no-nil-root");
  check->add_option("--verify-witness", verify_path, "re-check the witness or map of a saved JSON report");
  check->add_option("file", file)->required();
  auto* annih = app.add_subcommand("annihilator", "left and right annihilators of a set");
  annih->add_option("--set", set_text, "JSON list of coordinate vectors")->required();
  annih->add_option("file", file)->required();
  auto* radical = app.add_subcommand("radical", "degenerate, nil or Jacobson radical");
  radical->add_option("--kind", radical_kind, "deg, nil or rad")->check(CLI::IsMember({"deg", "nil", "rad"}));
  radical->add_option("file", file)->required();
  auto* lattice = app.add_subcommand("lattice", "the idempotent poset and whether it is a complete lattice");
  lattice->add_option("file", file)->required();
  auto* peirce_cmd = app.add_subcommand("peirce", "Peirce decomposition relative to an idempotent");
  peirce_cmd->add_option("--idempotent", idem_text, "coordinate vector")->required();
  peirce_cmd->add_option("file", file)->required();
  auto* random = app.add_subcommand("random", "write a seeded random special Jordan algebra");
  random->add_option("--p", random_p, "odd prime");
  random->add_option("--dim", random_dim, "dimension bound");
  random->add_option("file", file, "output path (stdout when omitted)");
  auto* corpus = app.add_subcommand("corpus", "the claims corpus");
  corpus->require_subcommand(1);
  corpus->fallthrough();
  auto* run = corpus->add_subcommand("run", "execute claims");
  run->add_option("--filter", filter, "claim id prefix, algebra id or locus substring");
  auto* exp = corpus->add_subcommand("export", "write the corpus algebras as files");
  exp->add_option("dir", out_dir);
  corpus->add_subcommand("list", "list corpus algebras");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (validate->parsed()) {
      const AnyAlgebra any = load_algebra(file);
      return cmd_validate(f, any);
    }
    if (info->parsed()) return with_algebra(file, [&](const auto& A) { return cmd_info(f, A); });
    if (check->parsed()) {
      if (!verify_path.empty()) return with_algebra(file, [&](const auto& A) { return cmd_verify(f, A, verify_path); });
      return with_algebra(file, [&](const auto& A) { return cmd_check(f, A, property); });
    }
    if (annih->parsed()) return with_algebra(file, [&](const auto& A) { return cmd_annihilator(f, A, set_text); });
    if (radical->parsed()) return with_algebra(file, [&](const auto& A) { return cmd_radical(f, A, radical_kind); });
    if (lattice->parsed()) return with_algebra(file, [&](const auto& A) { return cmd_lattice(f, A); });
    if (peirce_cmd->parsed()) return with_algebra(file, [&](const auto& A) { return cmd_peirce(f, A, idem_text); });
    if (random->parsed()) {
      auto R = random_special_algebra<ModP>(f.seed, FieldDesc::prime(random_p), random_dim);
      const std::string text = dump(algebra_to_json(R.algebra));
      if (file.empty())
        std::cout << text;
      else
        write_file(file, text);
      return kHolds;
    }
    if (run->parsed()) return cmd_corpus_run(f, filter);
    if (exp->parsed()) return cmd_corpus_export(out_dir);
    for (const auto& a : corpus_algebras())
      std::cout << a.id << "  dim " << std::visit([](const auto& A) { return A.dim(); }, a.algebra) << "  "
                << a.description << "\n";
    return kHolds;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::IndexOutOfRange:
      case ErrorCode::BadCoefficient:
      case ErrorCode::DuplicateProduct:
      case ErrorCode::InvalidArgument:
      case ErrorCode::InvalidField:
        return kUsage;
      default:
        return kUnknown;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
