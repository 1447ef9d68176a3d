#include "jordan/annihilators/deciders.hpp"
#include "jordan/corpus/algebras.hpp"
#include "jordan/radicals/lattice.hpp"
#include "jordan/radicals/radicals.hpp"
#include "brute.hpp"

#include <gtest/gtest.h>

using namespace jordan;
using jordan::testing::Brute;
using Set = jordan::testing::Set;

namespace {

const FieldDesc F3 = FieldDesc::prime(3);
const FieldDesc F5 = FieldDesc::prime(5);
const FieldDesc Q = FieldDesc::rationals();

std::vector<JordanAlgebra<ModP>> small_algebras() {
  std::vector<JordanAlgebra<ModP>> out{example2<ModP>(F3),
                                       example3<ModP>(1, F3),
                                       example3<ModP>(2, F3),
                                       nonunital_nil<ModP>(2, F3),
                                       hermitian_matrix_algebra<ModP>(2, 1, F3),
                                       truncated_sequence_algebra<ModP>(1, 2, 1, F3)};
  for (std::uint64_t seed = 100; seed < 115; ++seed)
    out.push_back(random_special_algebra<ModP>(seed, F3, 3).algebra);
  return out;
}

Subspace<ModP> span_of(const JordanAlgebra<ModP>& A, const std::vector<Element<ModP>>& xs) {
  std::vector<Vec<ModP>> rows;
  for (const auto& x : xs) rows.push_back(x.coords());
  return Subspace<ModP>::span(A.field(), A.dim(), rows);
}

}  // namespace

TEST(Radicals, AgreeWithIdealEnumeration) {
  for (const auto& A : small_algebras()) {
    Brute B(A);
    auto d = deg_radical(A), n = nil_radical(A), r = jacobson_radical(A);
    EXPECT_EQ(B.members(d.subspace), B.deg()) << A.name();
    EXPECT_EQ(B.members(n.subspace), B.nil()) << A.name();
    EXPECT_EQ(B.members(r.subspace), B.rad()) << A.name();
    EXPECT_EQ(d.verification.outcome, Outcome::Holds) << A.name();
    // Deg <= Nil = Rad in finite dimension
    EXPECT_TRUE(n.subspace.contains(d.subspace)) << A.name();
    EXPECT_EQ(n.subspace, r.subspace) << A.name();
  }
}

TEST(Radicals, ExampleTwo) {
  auto A = example2<ModP>(F3);
  auto e12 = span_of(A, {A.basis(1)});
  EXPECT_EQ(deg_radical(A).subspace, e12);
  EXPECT_EQ(nil_radical(A).subspace, e12);
  EXPECT_EQ(jacobson_radical(A).subspace, e12);
  auto Qt = quotient(A, e12);
  EXPECT_EQ(Qt.algebra.dim(), 1u);
  EXPECT_EQ(nondeg_check(Qt.algebra).outcome(), Outcome::Holds);
}

TEST(Radicals, ExampleThreeGenerators) {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto A = example3<ModP>(k, F3);
    std::vector<Element<ModP>> gens;
    for (std::size_t i = 1; i < A.dim(); ++i) gens.push_back(A.basis(i));
    auto G = span_of(A, gens);
    auto d = deg_radical(A);
    EXPECT_EQ(d.subspace, G) << k;
    EXPECT_EQ(nil_radical(A).subspace, G) << k;
    EXPECT_EQ(jacobson_radical(A).subspace, G) << k;
    FiniteModel M(A);
    EXPECT_EQ(M.squares_in(d.subspace).count(), 1u) << k;  // only 0
  }
}

TEST(Radicals, SymbolicFallback) {
  auto A = example2<Rational>(Q);
  auto d = deg_radical(A);
  EXPECT_EQ(d.subspace.rank(), 1u);
  EXPECT_TRUE(d.subspace.contains(A.basis(1).coords()));
  auto n = nil_radical(A);
  EXPECT_EQ(n.subspace, d.subspace);
  EXPECT_EQ(n.method, "fallback-deg");
}

TEST(Radicals, HermitianTwoByTwoIsSemisimple) {
  auto A = hermitian_matrix_algebra<ModP>(2, 1, F3);
  EXPECT_TRUE(deg_radical(A).subspace.is_zero());
  EXPECT_TRUE(nil_radical(A).subspace.is_zero());
  EXPECT_TRUE(jacobson_radical(A).subspace.is_zero());
}

TEST(Radicals, QuasiInverse) {
  auto A = nonunital_nil<ModP>(2, F5);
  auto z = A.element({1, 3});
  ASSERT_TRUE(is_quasi_invertible(A, z));
  auto w = quasi_inverse(A, z);
  // z and w quasi-inverse: z + w = z∘w in this power-associative, commutative setting
  EXPECT_EQ(z + w, A.mul(z, w));
}

TEST(Peirce, ProjectionsDecomposeTheSpace) {
  for (const auto& A : small_algebras()) {
    FiniteModel M(A);
    for (auto idx : M.idempotents()) {
      auto e = M.element(idx);
      auto d = peirce(A, e);
      // U_e + 2{e,x,1-e} + U_{1-e} = id
      for (std::size_t c = 0; c < A.dim(); ++c) {
        auto x = A.basis(c);
        auto sum = Element<ModP>(d.proj_one.apply(x.coords())) + Element<ModP>(d.proj_half.apply(x.coords())) +
                   Element<ModP>(d.proj_zero.apply(x.coords()));
        EXPECT_EQ(sum, x) << A.name();
      }
      // eigenspaces of L_e
      const auto half = A.scalar(2).inverse();
      for (std::uint64_t i = 0; i < M.size(); ++i) {
        auto x = M.element(i);
        auto ex = A.mul(e, x);
        EXPECT_EQ(d.one.contains(x.coords()), ex == x) << A.name();
        EXPECT_EQ(d.half.contains(x.coords()), ex == half * x) << A.name();
        EXPECT_EQ(d.zero.contains(x.coords()), ex.is_zero()) << A.name();
      }
    }
  }
}

TEST(Peirce, RejectsNonIdempotent) {
  auto A = example2<ModP>(F3);
  EXPECT_THROW(peirce(A, A.basis(1)), Error);
}

TEST(Lattice, OrderMatchesDefinition) {
  for (const auto& A : small_algebras()) {
    auto L = idempotent_lattice(A);
    ASSERT_TRUE(L.elements_complete);
    Brute B(A);
    EXPECT_EQ(L.elements.size(), B.idem.size()) << A.name();
    for (std::size_t i = 0; i < L.elements.size(); ++i)
      for (std::size_t j = 0; j < L.elements.size(); ++j) {
        const bool le = A.mul(L.elements[i], L.elements[j]) == L.elements[i];
        EXPECT_EQ(L.le(i, j), le) << A.name();
      }
    EXPECT_TRUE(L.partial_order) << A.name();
  }
}

TEST(Lattice, SmallCases) {
  auto E = idempotent_lattice(example2<ModP>(F3));
  ASSERT_EQ(E.elements.size(), 2u);
  EXPECT_TRUE(E.complete);
  ASSERT_TRUE(E.top && E.bottom);
  EXPECT_TRUE(E.elements[*E.bottom].is_zero());
  EXPECT_EQ(E.recipe_agrees, std::optional<bool>(true));

  auto N = nonunital_nil<ModP>(2, F3);
  auto L = idempotent_lattice(N);
  ASSERT_EQ(L.elements.size(), 1u);
  EXPECT_TRUE(L.complete);

  auto H = idempotent_lattice(hermitian_matrix_algebra<ModP>(2, 1, F3));
  EXPECT_TRUE(H.complete);
  EXPECT_EQ(H.recipe_agrees, std::optional<bool>(true));
}

TEST(Lattice, ViaLatticeMatchesDirect) {
  CheckOptions opt;
  for (const auto& A : small_algebras()) {
    FiniteModel M(A);
    EXPECT_EQ(bj_check_via_t25(M, opt).outcome(), bj_check_direct(M, opt).outcome()) << A.name();
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto A = random_special_algebra<ModP>(seed, F3, 4).algebra;
    FiniteModel M(A);
    EXPECT_EQ(bj_check_via_t25(M, opt).outcome(), bj_check_direct(M, opt).outcome()) << A.name();
  }
}
