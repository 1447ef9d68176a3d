#include "jordan/annihilators/dispatch.hpp"
#include "jordan/annihilators/verify.hpp"
#include "jordan/corpus/algebras.hpp"
#include "jordan/io/json.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace jordan;

namespace {

const FieldDesc F3 = FieldDesc::prime(3);
const FieldDesc Q = FieldDesc::rationals();

const std::string kE2 = R"({
  "name": "E2",
  "field": {"kind": "Fp", "p": 3},
  "dim": 2,
  "basis": ["1", "e12"],
  "unit": ["1", "0"],
  "products": [
    {"i": 0, "j": 0, "v": [["1", 0]]},
    {"i": 0, "j": 1, "v": [["1", 1]]}
  ]
})";

json e2_json() { return parse_json_text(kE2, "e2"); }

ErrorCode code_of(const json& j) {
  try {
    algebra_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::InvalidArgument;
}

template <FieldScalar S>
void expect_same_table(const JordanAlgebra<S>& a, const JordanAlgebra<S>& b) {
  ASSERT_EQ(a.dim(), b.dim());
  EXPECT_EQ(a.labels(), b.labels());
  EXPECT_EQ(a.unit().has_value(), b.unit().has_value());
  if (a.unit() && b.unit()) { EXPECT_EQ(*a.unit(), *b.unit()); }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) EXPECT_EQ(a.mul(a.basis(i), a.basis(j)), b.mul(b.basis(i), b.basis(j)));
}

}  // namespace

TEST(Io, LoadsExampleTwo) {
  auto any = algebra_from_json(e2_json());
  const auto& A = std::get<JordanAlgebra<ModP>>(any);
  expect_same_table(A, [] {
    auto E = example2<ModP>(F3);
    return JordanAlgebra<ModP>(E);
  }());
  EXPECT_EQ(A.mul(A.basis(1), A.basis(1)), A.zero());
}

TEST(Io, ProductsWithIGreaterThanJAreRejected) {
  auto j = e2_json();
  j["products"][1]["i"] = 1;
  j["products"][1]["j"] = 0;
  EXPECT_EQ(code_of(j), ErrorCode::ParseError);
}

TEST(Io, CoefficientsReduceModP) {
  auto j = e2_json();
  j["field"]["p"] = 5;
  j["products"][1]["v"] = json::array({json::array({"7", 1})});
  auto any = algebra_from_json(j);
  const auto& A = std::get<JordanAlgebra<ModP>>(any);
  EXPECT_EQ(A.mul(A.basis(0), A.basis(1)), A.element({0, 2}));
}

TEST(Io, MalformedFiles) {
  {
    auto j = e2_json();
    j["products"][0]["v"] = json::array({json::array({"1", 2})});
    EXPECT_EQ(code_of(j), ErrorCode::IndexOutOfRange);
  }
  {
    auto j = e2_json();
    j["products"][1]["j"] = 5;
    EXPECT_EQ(code_of(j), ErrorCode::IndexOutOfRange);
  }
  {
    auto j = e2_json();
    j["products"].push_back(json{{"i", 0}, {"j", 0}, {"v", json::array()}});
    EXPECT_EQ(code_of(j), ErrorCode::DuplicateProduct);
  }
  {
    auto j = e2_json();
    j["products"][0]["v"] = json::array({json::array({"1/3", 0})});
    EXPECT_EQ(code_of(j), ErrorCode::BadCoefficient);
    j["products"][0]["v"] = json::array({json::array({"one", 0})});
    EXPECT_EQ(code_of(j), ErrorCode::BadCoefficient);
  }
  {
    auto j = e2_json();
    j["products"][0]["v"] = json::array({json::array({1, 0})});  // coefficients are strings
    EXPECT_EQ(code_of(j), ErrorCode::BadCoefficient);
  }
  {
    auto j = e2_json();
    j["field"] = json{{"kind", "Fp"}, {"p", 9}};
    EXPECT_EQ(code_of(j), ErrorCode::InvalidField);
  }
  {
    auto j = e2_json();
    j.erase("dim");
    EXPECT_EQ(code_of(j), ErrorCode::ParseError);
  }
  EXPECT_THROW(parse_json_text("{not json", "x"), Error);
}

TEST(Io, RationalCoefficients) {
  auto j = e2_json();
  j["field"] = json{{"kind", "Q"}};
  j["products"][1]["v"] = json::array({json::array({"1/2", 1}), json::array({"-3/6", 0})});
  auto any = algebra_from_json(j);
  const auto& A = std::get<JordanAlgebra<Rational>>(any);
  EXPECT_EQ(A.mul(A.basis(0), A.basis(1)), Element<Rational>(Vec<Rational>{Rational(-1, 2), Rational(1, 2)}));
}

TEST(Io, RoundTripThroughFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "jordan_io_test";
  std::filesystem::create_directories(dir);
  std::vector<AnyAlgebra> algebras{example2<ModP>(F3), example3<Rational>(2, Q), nonunital_nil<ModP>(2, F3),
                                   hermitian_matrix_algebra<ModP>(2, 4, F3), full_matrix_jordan<Rational>(2, Q)};
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const auto path = (dir / ("a" + std::to_string(i) + ".json")).string();
    save_algebra(algebras[i], path);
    auto back = load_algebra(path);
    ASSERT_EQ(back.index(), algebras[i].index());
    std::visit(
        [&](const auto& A) {
          using Alg = std::decay_t<decltype(A)>;
          expect_same_table(A, std::get<Alg>(back));
          EXPECT_EQ(A.name(), std::get<Alg>(back).name());
        },
        algebras[i]);
    EXPECT_EQ(dump(algebra_to_json(back)), dump(algebra_to_json(algebras[i])));
  }
  std::filesystem::remove_all(dir);
}

TEST(Io, ShippedCorpusFilesLoad) {
  std::size_t n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(std::string(JORDAN_SOURCE_DIR) + "/data/corpus")) {
    auto A = load_algebra(entry.path().string());
    EXPECT_GT(std::visit([](const auto& B) { return B.dim(); }, A), 0u) << entry.path();
    ++n;
  }
  EXPECT_GE(n, 20u);
  EXPECT_THROW(load_algebra(std::string(JORDAN_SOURCE_DIR) + "/tests/data/bad_order.json"), Error);
}

TEST(Io, WitnessRoundTrip) {
  auto M = full_matrix_jordan<ModP>(3, F3);
  auto r = check_property(M, Property::RJ);
  ASSERT_TRUE(r.verdict.witness);
  auto j = witness_to_json(*r.verdict.witness);
  auto w = witness_from_json<ModP>(M.field(), M.dim(), parse_json_text(j.dump(), "w"));
  EXPECT_EQ(w.kind, r.verdict.witness->kind);
  EXPECT_EQ(w.elements, r.verdict.witness->elements);
  EXPECT_TRUE(verify_witness(M, Property::RJ, w).ok);

  auto rep = report_to_json(M, r);
  EXPECT_EQ(rep["verdict"]["outcome"], "Fails");
  EXPECT_EQ(rep["property"], to_string(Property::RJ));
}

TEST(Io, ElementsFromJson) {
  auto e = element_from_json<ModP>(F3, 2, json::array({"4", "-1"}), "x");
  EXPECT_EQ(e, Element<ModP>(Vec<ModP>{ModP(1, 3), ModP(2, 3)}));
  EXPECT_THROW(element_from_json<ModP>(F3, 2, json::array({"1"}), "x"), Error);
  EXPECT_THROW(element_from_json<ModP>(F3, 2, json{{"a", 1}}, "x"), Error);
}
