#include "jordan/algebra/constructions.hpp"
#include "jordan/algebra/validate.hpp"
#include "jordan/corpus/algebras.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jordan;

namespace {

const FieldDesc F3 = FieldDesc::prime(3);
const FieldDesc F5 = FieldDesc::prime(5);
const FieldDesc Q = FieldDesc::rationals();

template <FieldScalar S>
Element<S> random_element(const JordanAlgebra<S>& A, std::mt19937_64& rng, std::int64_t range = 5) {
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < A.dim(); ++i) c.push_back(static_cast<std::int64_t>(rng() % range) - range / 2);
  return A.element(c);
}

// n x n matrix product on row-major coordinate vectors: the associative oracle.
template <FieldScalar S>
Vec<S> matmul(const Vec<S>& a, const Vec<S>& b, std::size_t n, const FieldDesc& f) {
  Vec<S> out = zero_vec<S>(f, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
  return out;
}

}  // namespace

TEST(Algebra, E2Products) {
  auto A = example2<ModP>(F3);
  const auto e12 = A.basis(1);
  EXPECT_TRUE(A.square(e12).is_zero());
  EXPECT_EQ(A.mul(*A.unit(), e12), e12);
  EXPECT_TRUE(A.u_op(e12).is_zero_matrix());
  EXPECT_EQ(A.u_op(*A.unit()), Matrix<ModP>::identity(F3, 2));
}

TEST(Algebra, UnitActsAsIdentity) {
  std::mt19937_64 rng(1);
  for (const auto& A : {full_matrix_jordan<ModP>(2, F5), hermitian_matrix_algebra<ModP>(2, 2, F5), example3<ModP>(2, F5)}) {
    ASSERT_TRUE(A.unit());
    for (int t = 0; t < 20; ++t) {
      auto x = random_element(A, rng);
      EXPECT_EQ(A.mul(*A.unit(), x), x);
      EXPECT_EQ(A.triple(*A.unit(), x, *A.unit()), x);
    }
  }
}

TEST(Algebra, RemarkTwoPowers) {
  auto A = full_matrix_jordan<ModP>(3, F3);
  auto N = A.element({0, 1, 1, 0, 0, 1, 0, 0, 0});
  EXPECT_EQ(A.power(N, 2), A.basis(2));  // e13
  EXPECT_TRUE(A.power(N, 4).is_zero());
}

TEST(Algebra, UOperatorIsAxaInMatrixAlgebras) {
  std::mt19937_64 rng(2);
  for (std::size_t n : {2u, 3u}) {
    auto A = full_matrix_jordan<ModP>(n, F5);
    for (int t = 0; t < 200; ++t) {
      auto a = random_element(A, rng), x = random_element(A, rng);
      Vec<ModP> axa = matmul(matmul(a.coords(), x.coords(), n, F5), a.coords(), n, F5);
      EXPECT_EQ(A.u(a, x), Element<ModP>(axa));
      EXPECT_EQ(A.u_op(a).apply(x.coords()), axa);
    }
  }
  auto M = full_matrix_jordan<ModP>(2, F5);
  EXPECT_TRUE(M.u(M.basis(0), M.basis(1)).is_zero());
  EXPECT_EQ(M.u(M.basis(0), M.basis(0)), M.basis(0));
}

TEST(Algebra, UOperatorOverQ) {
  std::mt19937_64 rng(3);
  auto A = full_matrix_jordan<Rational>(2, Q);
  for (int t = 0; t < 50; ++t) {
    auto a = random_element(A, rng, 7), x = random_element(A, rng, 7);
    EXPECT_EQ(A.u(a, x), Element<Rational>(matmul(matmul(a.coords(), x.coords(), 2, Q), a.coords(), 2, Q)));
  }
}

TEST(Algebra, TripleIdentities) {
  std::mt19937_64 rng(4);
  auto A = hermitian_matrix_algebra<ModP>(3, 1, F5);
  for (int t = 0; t < 100; ++t) {
    auto a = random_element(A, rng), b = random_element(A, rng), c = random_element(A, rng);
    EXPECT_EQ(A.triple(a, b, a), A.u(a, b));
    // U_{a+c} - U_a - U_c = 2{a . c}
    EXPECT_EQ(A.u(a + c, b) - A.u(a, b) - A.u(c, b), A.scalar(2) * A.triple(a, b, c));
    // power associativity
    EXPECT_EQ(A.power(a, 5), A.mul(A.power(a, 2), A.power(a, 3)));
  }
  auto E = example2<ModP>(F3);
  EXPECT_TRUE(E.triple(*E.unit() - *E.unit(), E.basis(1), *E.unit()).is_zero());
}

TEST(Validate, CorpusAlgebrasAreJordan) {
  for (const auto& A : {example2<ModP>(F3), example3<ModP>(3, F3), nonunital_nil<ModP>(2, F3), full_matrix_jordan<ModP>(2, F3),
                        hermitian_matrix_algebra<ModP>(2, 4, F3), truncated_sequence_algebra<ModP>(2, 2, 1, F3)}) {
    auto r = validate_jordan(A);
    EXPECT_TRUE(r.valid) << A.name() << ": " << r.message;
    EXPECT_EQ(r.method, ValidationReport::Method::Exhaustive);
  }
  auto H = validate_jordan(hermitian_matrix_algebra<Rational>(2, 1, Q));
  EXPECT_TRUE(H.valid);
  EXPECT_EQ(H.method, ValidationReport::Method::Linearized);
}

TEST(Validate, PerturbedE2IsRejected) {
  // 1 . 1 = 1 but 1 . e12 = 2 e12.
  AlgebraBuilder<Rational> b("perturbed", Q, std::vector<std::string>{"1", "e12"});
  b.add(0, 0, 0, 1).add(0, 1, 1, 2);
  b.unit(Element<Rational>(Vec<Rational>{Rational(1), Rational(0)}));
  auto r = validate_jordan(b.build());
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.message.empty());
  // Without the declared unit the Jordan identity itself fails at a = 1 + e12, b = 1.
  // (b = e12 satisfies it.)
  AlgebraBuilder<ModP> c("perturbed", F5, std::vector<std::string>{"1", "e12"});
  c.add(0, 0, 0, 1).add(0, 1, 1, 2);
  auto P = c.build();
  auto a = P.element({1, 1}), one = P.basis(0), e = P.basis(1);
  EXPECT_FALSE(P.mul(P.mul(P.square(a), one), a) == P.mul(P.square(a), P.mul(one, a)));
  EXPECT_TRUE(P.mul(P.mul(P.square(a), e), a) == P.mul(P.square(a), P.mul(e, a)));
  auto rp = validate_jordan(P);
  EXPECT_FALSE(rp.valid);
  EXPECT_EQ(rp.violation_kind, "jordan");
}

TEST(Validate, OctonionBound) {
  EXPECT_THROW(hermitian_matrix_algebra<Rational>(4, 8, Q), Error);
  EXPECT_FALSE(validate_jordan(hermitian_table_unchecked<Rational>(4, 8, Q)).valid);
}

TEST(Validate, CharacteristicThreeBeyondBudget) {
  auto A = full_matrix_jordan<ModP>(3, F3);
  EXPECT_THROW(validate_jordan(A, 1000), Error);
}

TEST(Constructions, UnitalHull) {
  auto N = nonunital_nil<ModP>(1, F3);
  auto H = unital_hull(N);
  auto E = example2<ModP>(F3);
  ASSERT_EQ(H.dim(), 2u);
  ASSERT_TRUE(H.unit());
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(H.mul(*H.unit(), H.basis(i)), H.basis(i));
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(H.product(i, j), E.product(i, j));
  }
  // A sits in its hull as an ideal.
  std::vector<Vec<ModP>> rows;
  for (std::size_t i = 0; i < N.dim(); ++i) rows.push_back(embed_in_hull(N, N.basis(i)).coords());
  EXPECT_TRUE(is_ideal(H, Subspace<ModP>::span(F3, H.dim(), rows)));
  auto H2 = unital_hull(E);
  EXPECT_EQ(H2.dim(), 3u);
  auto old_unit = embed_in_hull(E, *E.unit());
  EXPECT_TRUE(H2.is_idempotent(old_unit));
  EXPECT_FALSE(old_unit == *H2.unit());
}

TEST(Constructions, QuotientAndDirectSum) {
  auto E = example2<ModP>(F3);
  auto Q1 = quotient(E, Subspace<ModP>::span(F3, 2, {E.basis(1).coords()}));
  EXPECT_EQ(Q1.algebra.dim(), 1u);
  EXPECT_TRUE(Q1.algebra.unit());
  EXPECT_EQ(Q1.algebra.square(Q1.algebra.basis(0)), Q1.algebra.basis(0));
  auto Q0 = quotient(E, Subspace<ModP>(F3, 2));
  EXPECT_EQ(Q0.algebra.dim(), 2u);
  EXPECT_THROW(quotient(E, Subspace<ModP>::span(F3, 2, {E.basis(0).coords()})), Error);

  auto M = full_matrix_jordan<ModP>(2, F3);
  auto I = Subspace<ModP>(F3, 4);
  auto Qm = quotient(M, I);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(Qm.project(M.mul(M.basis(i), M.basis(j))), Qm.algebra.mul(Qm.project(M.basis(i)), Qm.project(M.basis(j))));

  auto H = hermitian_matrix_algebra<ModP>(2, 1, F3);
  auto D = direct_sum(H, H);
  EXPECT_EQ(D.dim(), 6u);
  ASSERT_TRUE(D.unit());
  Vec<ModP> u = H.unit()->coords();
  u.insert(u.end(), H.unit()->coords().begin(), H.unit()->coords().end());
  EXPECT_EQ(*D.unit(), Element<ModP>(u));
}

TEST(Constructions, SpecialFromAssociative) {
  auto M = special_from_associative(matrix_units<ModP>(2, F3));
  EXPECT_EQ(M.dim(), 4u);
  EXPECT_TRUE(validate_jordan(M).valid);
  AssociativeData<ModP> D{"F1 + Fe12", F3, {"1", "e12"}, {}, Vec<ModP>{ModP(1, 3), ModP(0, 3)}};
  D.products = {{{0, ModP(1, 3)}}, {{1, ModP(1, 3)}}, {{1, ModP(1, 3)}}, {}};
  auto E = special_from_associative(D);
  auto E2 = example2<ModP>(F3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(E.product(i, j), E2.product(i, j));
  AssociativeData<ModP> bad{"bad", F3, {"a", "b"}, {{{1, ModP(1, 3)}}, {}, {}, {{0, ModP(1, 3)}}}, std::nullopt};
  EXPECT_THROW(special_from_associative(bad), Error);
}

TEST(Constructions, SquaresSpan) {
  EXPECT_EQ(squares_span(example2<ModP>(F3)).rank(), 2u);
  EXPECT_TRUE(squares_span(nonunital_nil<ModP>(3, F3)).is_zero());
  EXPECT_EQ(squares_span(full_matrix_jordan<ModP>(2, F3)).rank(), 4u);
}

TEST(Constructions, HermitianDimensions) {
  EXPECT_EQ(hermitian_matrix_algebra<Rational>(2, 1, Q).dim(), 3u);
  EXPECT_EQ(hermitian_matrix_algebra<ModP>(3, 2, F3).dim(), 9u);
  EXPECT_EQ(hermitian_matrix_algebra<ModP>(2, 4, F3).dim(), 6u);
  EXPECT_EQ(hermitian_matrix_algebra<Rational>(3, 8, Q).dim(), 27u);
}

TEST(Constructions, HermitianProductIsSymmetrizedMatrixProduct) {
  // H_3 over F_5 with degree 1: compare against the symmetrized product of symmetric matrices.
  std::mt19937_64 rng(9);
  auto A = hermitian_matrix_algebra<ModP>(3, 1, F5);
  auto hb = detail::hermitian_basis<ModP>(3, 1, F5);
  auto to_matrix = [&](const Element<ModP>& x) {
    Vec<ModP> m = zero_vec<ModP>(F5, 9);
    for (std::size_t k = 0; k < A.dim(); ++k)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i * 3 + j] += x[k] * hb.mats[k][i][j].coords()[0];
    return m;
  };
  const ModP half = ModP(2, 5).inverse();
  for (int t = 0; t < 100; ++t) {
    auto a = random_element(A, rng), b = random_element(A, rng);
    auto ab = matmul(to_matrix(a), to_matrix(b), 3, F5), ba = matmul(to_matrix(b), to_matrix(a), 3, F5);
    Vec<ModP> sym(9, ModP(0, 5));
    for (int i = 0; i < 9; ++i) sym[i] = half * (ab[i] + ba[i]);
    EXPECT_EQ(to_matrix(A.mul(a, b)), sym);
  }
}

TEST(Constructions, RandomSpecialAlgebras) {
  auto a = random_special_algebra<ModP>(0, F3, 4);
  auto b = random_special_algebra<ModP>(0, F3, 4);
  EXPECT_EQ(a.algebra.dim(), b.algebra.dim());
  for (std::size_t i = 0; i < a.algebra.dim(); ++i)
    for (std::size_t j = 0; j < a.algebra.dim(); ++j) EXPECT_EQ(a.algebra.product(i, j), b.algebra.product(i, j));
  std::mt19937_64 rng(10);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto R = random_special_algebra<ModP>(seed, F3, 4);
    EXPECT_LE(R.algebra.dim(), 4u);
    EXPECT_TRUE(validate_jordan(R.algebra).valid);
    for (int t = 0; t < 10; ++t) {
      auto x = random_element(R.algebra, rng, 3), y = random_element(R.algebra, rng, 3);
      const std::size_t n = R.matrix_size;
      EXPECT_EQ(R.matrix_of(R.algebra.u(x, y)),
                matmul(matmul(R.matrix_of(x), R.matrix_of(y), n, F3), R.matrix_of(x), n, F3));
    }
  }
}
