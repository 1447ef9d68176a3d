#pragma once

#include "jordan/annihilators/verdict.hpp"
#include "jordan/exact/linalg.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <variant>

namespace jordan {

using json = nlohmann::ordered_json;

using AnyAlgebra = std::variant<JordanAlgebra<Rational>, JordanAlgebra<ModP>>;

inline const FieldDesc& field_of(const AnyAlgebra& A) {
  return std::visit([](const auto& a) -> const FieldDesc& { return a.field(); }, A);
}

// ---------------------------------------------------------------------------
// Scalars, elements, subspaces.

inline json field_to_json(const FieldDesc& f) {
  if (f.is_prime_field()) return json{{"kind", "Fp"}, {"p", f.p}};
  return json{{"kind", "Q"}};
}

inline FieldDesc field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorCode::ParseError, "field: expected {\"kind\": \"Q\"} or {\"kind\": \"Fp\", \"p\": int}");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "Q") return FieldDesc::rationals();
  if (kind == "Fp") {
    if (!j.contains("p") || !j["p"].is_number_integer() || j["p"].get<std::int64_t>() < 2 ||
        j["p"].get<std::int64_t>() > 46337)
      throw Error(ErrorCode::ParseError, "field.p: expected an odd prime below 46337");
    return FieldDesc::prime(j["p"].get<std::uint32_t>());
  }
  throw Error(ErrorCode::ParseError, "field.kind: unknown kind '" + kind + "'");
}

template <FieldScalar S>
json vec_to_json(const Vec<S>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(format_scalar(c));
  return out;
}

template <FieldScalar S>
json element_to_json(const Element<S>& x) {
  return vec_to_json<S>(x.coords());
}

template <FieldScalar S>
S scalar_from_json(const FieldDesc& f, const json& j, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorCode::BadCoefficient, where + ": coefficient must be a string");
  try {
    return ScalarTraits<S>::parse(f, j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::BadCoefficient, where + ": " + e.what());
  }
}

template <FieldScalar S>
Element<S> element_from_json(const FieldDesc& f, std::size_t dim, const json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, where + ": expected a coordinate array");
  if (j.size() != dim)
    throw Error(ErrorCode::ParseError,
                where + ": expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  Vec<S> v;
  v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) v.push_back(scalar_from_json<S>(f, j[i], where + "[" + std::to_string(i) + "]"));
  return Element<S>(std::move(v));
}

template <FieldScalar S>
json subspace_to_json(const Subspace<S>& V) {
  json basis = json::array();
  for (const auto& b : V.basis()) basis.push_back(vec_to_json<S>(b));
  return json{{"dim", V.rank()}, {"basis", basis}};
}

// ---------------------------------------------------------------------------
// Algebra files.

template <FieldScalar S>
json algebra_to_json(const JordanAlgebra<S>& A) {
  json j;
  j["name"] = A.name();
  j["field"] = field_to_json(A.field());
  j["dim"] = A.dim();
  j["basis"] = A.labels();
  if (A.unit()) j["unit"] = element_to_json(*A.unit());
  json products = json::array();
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t k = i; k < A.dim(); ++k) {
      const auto& sv = A.product(i, k);
      if (sv.empty()) continue;
      json v = json::array();
      for (const auto& t : sv) v.push_back(json::array({format_scalar(t.coeff), t.index}));
      products.push_back(json{{"i", i}, {"j", k}, {"v", v}});
    }
  j["products"] = products;
  return j;
}

inline json algebra_to_json(const AnyAlgebra& A) {
  return std::visit([](const auto& a) { return algebra_to_json(a); }, A);
}

namespace detail {

inline std::size_t index_field(const json& rec, const char* key, std::size_t dim, const std::string& where) {
  if (!rec.contains(key) || !rec[key].is_number_integer())
    throw Error(ErrorCode::ParseError, where + "." + key + ": expected an integer");
  const auto v = rec[key].get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= dim)
    throw Error(ErrorCode::IndexOutOfRange, where + "." + key + " = " + std::to_string(v) + " outside 0.." +
                                                std::to_string(dim == 0 ? 0 : dim - 1));
  return static_cast<std::size_t>(v);
}

template <FieldScalar S>
JordanAlgebra<S> algebra_from_json_as(const json& j, const FieldDesc& f, std::size_t dim) {
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != dim)
      throw Error(ErrorCode::ParseError, "basis: expected " + std::to_string(dim) + " labels");
    for (const auto& l : j["basis"]) {
      if (!l.is_string()) throw Error(ErrorCode::ParseError, "basis: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  }
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "algebra";
  AlgebraBuilder<S> b(name, f, labels);
  if (!j.contains("products") || !j["products"].is_array())
    throw Error(ErrorCode::ParseError, "products: expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t r = 0; r < j["products"].size(); ++r) {
    const auto& rec = j["products"][r];
    const std::string where = "products[" + std::to_string(r) + "]";
    if (!rec.is_object()) throw Error(ErrorCode::ParseError, where + ": expected an object");
    const std::size_t i = index_field(rec, "i", dim, where), k = index_field(rec, "j", dim, where);
    if (i > k) throw Error(ErrorCode::ParseError, where + ": i > j (only i <= j may be listed)");
    if (!seen.emplace(i, k).second)
      throw Error(ErrorCode::DuplicateProduct, where + ": product (" + std::to_string(i) + "," + std::to_string(k) +
                                                   ") listed twice");
    if (!rec.contains("v") || !rec["v"].is_array()) throw Error(ErrorCode::ParseError, where + ".v: expected an array");
    Vec<S> v = zero_vec<S>(f, dim);
    std::set<std::size_t> targets;
    for (std::size_t t = 0; t < rec["v"].size(); ++t) {
      const auto& term = rec["v"][t];
      const std::string tw = where + ".v[" + std::to_string(t) + "]";
      if (!term.is_array() || term.size() != 2) throw Error(ErrorCode::ParseError, tw + ": expected [coeff, k]");
      const S c = scalar_from_json<S>(f, term[0], tw);
      if (!term[1].is_number_integer()) throw Error(ErrorCode::ParseError, tw + ": k must be an integer");
      const auto kk = term[1].get<std::int64_t>();
      if (kk < 0 || static_cast<std::uint64_t>(kk) >= dim)
        throw Error(ErrorCode::IndexOutOfRange, tw + ": k = " + std::to_string(kk) + " out of range");
      if (!targets.insert(static_cast<std::size_t>(kk)).second)
        throw Error(ErrorCode::DuplicateProduct, tw + ": basis index " + std::to_string(kk) + " repeated");
      v[static_cast<std::size_t>(kk)] = c;
    }
    b.set(i, k, std::span<const S>(v));
  }
  if (j.contains("unit") && !j["unit"].is_null()) b.unit(element_from_json<S>(f, dim, j["unit"], "unit"));
  return b.build();
}

}  // namespace detail

inline AnyAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "algebra file: expected a JSON object");
  if (!j.contains("field")) throw Error(ErrorCode::ParseError, "field: missing");
  const FieldDesc f = field_from_json(j["field"]);
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 0)
    throw Error(ErrorCode::ParseError, "dim: expected a non-negative integer");
  const auto dim = j["dim"].get<std::size_t>();
  if (f.is_prime_field()) return detail::algebra_from_json_as<ModP>(j, f, dim);
  return detail::algebra_from_json_as<Rational>(j, f, dim);
}

inline json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AnyAlgebra load_algebra(const std::string& path) { return algebra_from_json(parse_json_text(read_file(path), path)); }

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, path + ": cannot write");
  out << text;
}

template <FieldScalar S>
void save_algebra(const JordanAlgebra<S>& A, const std::string& path) {
  write_file(path, dump(algebra_to_json(A)));
}

inline void save_algebra(const AnyAlgebra& A, const std::string& path) { write_file(path, dump(algebra_to_json(A))); }

// ---------------------------------------------------------------------------
// Reports.

template <FieldScalar S>
json witness_to_json(const Witness<S>& w) {
  json j;
  j["kind"] = w.kind;
  json els = json::array();
  for (const auto& e : w.elements) els.push_back(element_to_json(e));
  j["elements"] = els;
  if (w.idempotent) j["idempotent"] = element_to_json(*w.idempotent);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

template <FieldScalar S>
Witness<S> witness_from_json(const FieldDesc& f, std::size_t dim, const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() || !j.contains("elements") ||
      !j["elements"].is_array())
    throw Error(ErrorCode::ParseError, "witness: expected {kind, elements}");
  Witness<S> w;
  w.kind = j["kind"].get<std::string>();
  for (std::size_t i = 0; i < j["elements"].size(); ++i)
    w.elements.push_back(element_from_json<S>(f, dim, j["elements"][i], "witness.elements[" + std::to_string(i) + "]"));
  if (j.contains("idempotent")) w.idempotent = element_from_json<S>(f, dim, j["idempotent"], "witness.idempotent");
  if (j.contains("note") && j["note"].is_string()) w.note = j["note"].get<std::string>();
  return w;
}

template <FieldScalar S>
json verdict_to_json(const Verdict<S>& v) {
  json j;
  j["outcome"] = to_string(v.outcome);
  j["method"] = v.method;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  return j;
}

template <FieldScalar S>
json report_to_json(const JordanAlgebra<S>& A, const ClassReport<S>& r) {
  json j;
  j["algebra"] = A.name();
  j["property"] = to_string(r.property);
  j["verdict"] = verdict_to_json(r.verdict);
  j["field"] = field_to_json(r.field);
  j["mode"] = to_string(r.mode);
  j["budget"] = r.budget;
  if (!r.idempotent_map.empty()) {
    json m = json::array();
    for (const auto& [x, e] : r.idempotent_map) m.push_back(json{{"x", element_to_json(x)}, {"e", element_to_json(e)}});
    j["idempotent_map"] = m;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace jordan
