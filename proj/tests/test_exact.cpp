#include "jordan/exact/composition.hpp"
#include "jordan/exact/linalg.hpp"
#include "jordan/exact/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jordan;

namespace {

const FieldDesc F3 = FieldDesc::prime(3);
const FieldDesc F5 = FieldDesc::prime(5);
const FieldDesc Q = FieldDesc::rationals();

template <FieldScalar S>
Vec<S> v(const FieldDesc& f, std::initializer_list<std::int64_t> xs) {
  Vec<S> out;
  for (auto x : xs) out.push_back(f.make<S>(x));
  return out;
}

}  // namespace

TEST(Scalar, SmallFieldFacts) {
  EXPECT_EQ(ModP(2, 5).inverse(), ModP(3, 5));
  EXPECT_EQ(ModP(2, 3) * ModP(2, 3), ModP(1, 3));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(ModP(-1, 5).value(), 4u);
  EXPECT_EQ(ModP(7, 5).value(), 2u);
}

TEST(Scalar, ModPAgreesWithIntegerArithmetic) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u})
    for (std::int64_t a = -2 * p; a < 2 * static_cast<std::int64_t>(p); ++a)
      for (std::int64_t b = -5; b < static_cast<std::int64_t>(p); ++b) {
        auto m = [p](std::int64_t x) { return static_cast<std::uint32_t>(((x % p) + p) % p); };
        EXPECT_EQ((ModP(a, p) + ModP(b, p)).value(), m(a + b));
        EXPECT_EQ((ModP(a, p) - ModP(b, p)).value(), m(a - b));
        EXPECT_EQ((ModP(a, p) * ModP(b, p)).value(), m(a * b));
        if (m(b) != 0) { EXPECT_EQ((ModP(b, p) * ModP(b, p).inverse()).value(), 1u); }
      }
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(ModP(0, 5).inverse(), Error);
  EXPECT_THROW(inverse(Rational(0)), Error);
}

TEST(Scalar, RationalAgreesWithCrossMultiplication) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    std::int64_t a = static_cast<std::int64_t>(rng() % 41) - 20, b = 1 + rng() % 17;
    std::int64_t c = static_cast<std::int64_t>(rng() % 41) - 20, d = 1 + rng() % 17;
    Rational x(a, b), y(c, d);
    // (a/b)(c/d) = ac/bd and a/b + c/d = (ad + bc)/bd, compared by cross-multiplying.
    Rational s = x + y, p = x * y;
    EXPECT_EQ(numerator(s) * b * d, (a * d + c * b) * denominator(s));
    EXPECT_EQ(numerator(p) * b * d, a * c * denominator(p));
  }
}

TEST(Scalar, ParseAndFormat) {
  EXPECT_EQ(format_scalar(ScalarTraits<Rational>::parse(Q, "2/4")), "1/2");
  EXPECT_EQ(format_scalar(ScalarTraits<Rational>::parse(Q, "3")), "3/1");
  EXPECT_EQ(format_scalar(ScalarTraits<ModP>::parse(F5, "7")), "2");
  EXPECT_EQ(format_scalar(ScalarTraits<ModP>::parse(F5, "-1")), "4");
  EXPECT_THROW(ScalarTraits<Rational>::parse(Q, "1/0"), Error);
  EXPECT_THROW(ScalarTraits<ModP>::parse(F5, "x"), Error);
}

TEST(Scalar, FieldValidation) {
  EXPECT_THROW(FieldDesc::prime(2), Error);
  EXPECT_THROW(FieldDesc::prime(9), Error);
  EXPECT_NO_THROW(FieldDesc::prime(13));
}

TEST(Scalar, SquareRootsModP) {
  for (std::uint32_t p : {3u, 5u, 7u, 13u})
    for (std::uint32_t a = 0; a < p; ++a) {
      bool is_square = false;
      for (std::uint32_t r = 0; r < p; ++r) is_square = is_square || (r * r) % p == a;
      auto s = ScalarTraits<ModP>::sqrt(ModP(a, p));
      EXPECT_EQ(s.has_value(), is_square) << a << " mod " << p;
      if (s) { EXPECT_EQ(*s * *s, ModP(a, p)); }
    }
}

TEST(Linalg, RrefExamples) {
  auto a = Subspace<Rational>::span(Q, 2, {v<Rational>(Q, {2, 0}), v<Rational>(Q, {0, 2})});
  EXPECT_EQ(a.rank(), 2u);
  EXPECT_EQ(a.basis()[0], v<Rational>(Q, {1, 0}));
  auto b = Subspace<ModP>::span(F3, 2, {v<ModP>(F3, {1, 1}), v<ModP>(F3, {2, 2})});
  EXPECT_EQ(b.rank(), 1u);
  EXPECT_EQ(b.basis()[0], v<ModP>(F3, {1, 1}));
  auto c = Subspace<ModP>::span(F3, 3, {});
  EXPECT_TRUE(c.is_zero());
}

TEST(Linalg, KernelImageExamples) {
  EXPECT_TRUE(kernel(Matrix<ModP>::identity(F5, 3)).is_zero());
  EXPECT_EQ(kernel(Matrix<ModP>(F5, 2, 2)).rank(), 2u);
  EXPECT_EQ(image(Matrix<ModP>::identity(F5, 3)).rank(), 3u);
}

TEST(Linalg, RankNullityAndKernelVectorsOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix<ModP> m(F5, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = ModP(static_cast<std::int64_t>(rng() % 3 == 0 ? 0 : rng() % 5), 5);
    auto K = kernel(m);
    auto I = image(m);
    EXPECT_EQ(K.rank() + I.rank(), c);
    for (const auto& k : K.basis()) EXPECT_TRUE(is_zero_vec<ModP>(m.apply(k)));
    for (std::size_t j = 0; j < c; ++j) EXPECT_TRUE(I.contains(m.column(j)));
  }
}

TEST(Linalg, SubspaceOperations) {
  auto e1 = Subspace<ModP>::span(F3, 2, {v<ModP>(F3, {1, 0})});
  auto e2 = Subspace<ModP>::span(F3, 2, {v<ModP>(F3, {0, 1})});
  auto d = Subspace<ModP>::span(F3, 2, {v<ModP>(F3, {1, 1})});
  auto full = Subspace<ModP>::full(F3, 2);
  EXPECT_EQ(intersect(full, d), d);
  EXPECT_TRUE(intersect(e1, e2).is_zero());
  EXPECT_EQ(sum(e1, d), full);
  EXPECT_TRUE(full.contains(d));
  EXPECT_FALSE(e1.contains(d));
}

TEST(Linalg, IntersectionMatchesEnumeration) {
  // Over F_3 in dimension 4 the intersection can be compared with the set of common vectors.
  std::mt19937_64 rng(5);
  auto rand_space = [&] {
    std::vector<Vec<ModP>> rows;
    const std::size_t k = rng() % 4;
    for (std::size_t i = 0; i < k; ++i) {
      Vec<ModP> r;
      for (int j = 0; j < 4; ++j) r.push_back(ModP(static_cast<std::int64_t>(rng() % 3), 3));
      rows.push_back(r);
    }
    return Subspace<ModP>::span(F3, 4, rows);
  };
  for (int t = 0; t < 50; ++t) {
    auto V = rand_space(), W = rand_space();
    auto I = intersect(V, W);
    std::size_t common = 0;
    for (int c = 0; c < 81; ++c) {
      Vec<ModP> x;
      for (int j = 0, r = c; j < 4; ++j, r /= 3) x.push_back(ModP(r % 3, 3));
      const bool in = V.contains(x) && W.contains(x);
      common += in;
      EXPECT_EQ(I.contains(x), in);
    }
    std::size_t expect = 1;
    for (std::size_t i = 0; i < I.rank(); ++i) expect *= 3;
    EXPECT_EQ(common, expect);
  }
}

TEST(Composition, QuaternionTable) {
  auto unit = [](std::size_t k) { return CompositionScalar<Rational>::unit(Q, 4, k); };
  EXPECT_EQ(cd_mul(unit(1), unit(2)), unit(3));
  EXPECT_EQ(cd_mul(unit(2), unit(1)), Rational(-1) * unit(3));
  EXPECT_EQ(cd_mul(unit(1), unit(1)), Rational(-1) * unit(0));
}

TEST(Composition, NormIsMultiplicative) {
  std::mt19937_64 rng(3);
  for (std::size_t deg : {1u, 2u, 4u, 8u})
    for (int t = 0; t < 30; ++t) {
      std::vector<Rational> a, b;
      for (std::size_t i = 0; i < deg; ++i) {
        a.emplace_back(static_cast<std::int64_t>(rng() % 7) - 3);
        b.emplace_back(static_cast<std::int64_t>(rng() % 7) - 3);
      }
      CompositionScalar<Rational> x(Q, a), y(Q, b);
      EXPECT_EQ(cd_mul(x, y).norm(), x.norm() * y.norm());
      EXPECT_EQ(cd_mul(x, x.conjugate()), x.norm() * CompositionScalar<Rational>::unit(Q, deg, 0));
    }
}

TEST(Composition, OctonionsAreNotAssociative) {
  auto unit = [](std::size_t k) { return CompositionScalar<Rational>::unit(Q, 8, k); };
  EXPECT_FALSE(cd_mul(cd_mul(unit(1), unit(2)), unit(4)) == cd_mul(unit(1), cd_mul(unit(2), unit(4))));
}
