#include <gtest/gtest.h>

#include "support.hpp"

using namespace revtri;
using oracle::C;

TEST(Inner, ConjugateLinearInSecondSlot) {
  const Vector x{C(0, 1)};
  const Vector y{C(1, 0)};
  EXPECT_EQ(inner(x, y), C(0, 1));
  EXPECT_EQ(inner(y, x), C(0, -1));
  const Vector a{C(1, 2), C(3, -1)};
  const Vector b{C(-2, 1), C(0.5, 4)};
  const C alpha(0.3, -1.7);
  EXPECT_NEAR(std::abs(inner(a, alpha * b) - std::conj(alpha) * inner(a, b)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(inner(a, b) - oracle::dot(oracle::raw(a), oracle::raw(b))), 0.0, 1e-14);
}

TEST(Norm, MatchesDirectArithmetic) {
  EXPECT_DOUBLE_EQ(norm(Vector{C(3, 4)}), 5.0);
  EXPECT_DOUBLE_EQ(squared_norm(Vector{C(1, 1), C(0, 2)}), 6.0);
  EXPECT_DOUBLE_EQ(distance(Vector{C(1, 0)}, Vector{C(0, 1)}), std::sqrt(2.0));
  EXPECT_EQ(norm(Vector::zeros(4)), 0.0);
}

TEST(Vector, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(Vector(std::vector<C>{}), Error);
  try {
    Vector v{C(1, 0), C(std::nan(""), 0)};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::input);
  }
  EXPECT_THROW(Vector{C(INFINITY, 0)}, Error);
}

TEST(Vector, DimensionMismatchThrows) {
  EXPECT_THROW(Vector{1.0} + Vector({1.0, 2.0}), Error);
  EXPECT_THROW(inner(Vector{1.0}, Vector({1.0, 2.0})), Error);
}

TEST(Reference, RequiresUnitNorm) {
  try {
    Reference r(Vector{C(2, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_unit);
  }
  const Reference r = Reference::normalized(Vector{C(3, 4)});
  EXPECT_NEAR(norm(r.vector()), 1.0, 1e-15);
  EXPECT_THROW(Reference::normalized(Vector::zeros(2)), Error);
}

TEST(OrthonormalFamily, NamesOffendingPair) {
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NO_THROW(OrthonormalFamily({Vector({1.0, 0.0}), Vector({0.0, C(0, 1)})}));
  try {
    OrthonormalFamily f({Vector({1.0, 0.0, 0.0}), Vector({0.0, 1.0, 0.0}),
                         Vector({s, 0.0, s})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_orthonormal);
    ASSERT_TRUE(e.pair().has_value());
    EXPECT_EQ(*e.pair(), std::make_pair(std::size_t{0}, std::size_t{2}));
  }
  EXPECT_THROW(OrthonormalFamily({Vector{1.0}, Vector{C(0, 1)}}), Error);  // m > d
}

TEST(Family, SumAndNormsOfCanonicalPair) {
  const auto f = scalars({C(3, 4), C(4, 3)});
  EXPECT_EQ(family_sum(f)[0], C(7, 7));
  EXPECT_DOUBLE_EQ(sum_of_norms(f), 10.0);
  EXPECT_NEAR(norm(family_sum(f)), 7.0 * std::sqrt(2.0), 1e-14);
}

TEST(Family, RejectsMixedDimensions) {
  EXPECT_THROW(VectorFamily({Vector{1.0}, Vector({1.0, 0.0})}), Error);
  EXPECT_THROW(VectorFamily(std::vector<Vector>{}), Error);
}

TEST(Projection, BesselIdentityOnRandomInstances) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = rng.integer(1, 8);
    const std::size_t m = rng.integer(1, d);
    const auto basis = random_orthonormal(d, m, rng);
    const Vector x = random_vector(d, rng);
    const double lhs = squared_norm(x);
    const double b = bessel_sum(x, basis);
    const double res = projection_residual(x, basis);
    EXPECT_LE(b, lhs * (1 + 1e-12));
    EXPECT_NEAR(b + res, lhs, 1e-12 * lhs);
    double direct = 0.0;
    for (const auto& e : basis) direct += std::norm(oracle::dot(oracle::raw(x), oracle::raw(e)));
    EXPECT_NEAR(b, direct, 1e-12 * lhs);
  }
}

TEST(Projection, ResidualVanishesInsideSpan) {
  const auto basis = OrthonormalFamily({Vector({1.0, 0.0, 0.0}), Vector({0.0, 1.0, 0.0})});
  EXPECT_EQ(projection_residual(Vector({C(2, 1), C(-1, 3), 0.0}), basis), 0.0);
  EXPECT_DOUBLE_EQ(projection_residual(Vector({0.0, 0.0, C(0, 2)}), basis), 4.0);
  const double r3 = 1 / std::sqrt(3.0);
  EXPECT_NEAR(projection_residual(Vector({r3, r3, r3}), OrthonormalFamily({Vector({1.0, 0.0, 0.0})})), 2.0 / 3.0, 1e-15);
}

TEST(Orthonormalize, ProducesOrthonormalFamily) {
  Rng rng(5);
  std::vector<Vector> raw;
  for (int k = 0; k < 4; ++k) raw.push_back(random_vector(6, rng));
  const auto f = orthonormalize(raw);
  ASSERT_EQ(f.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_NEAR(std::abs(inner(f[i], f[j]) - C(i == j ? 1.0 : 0.0)), 0.0, 1e-13);
  EXPECT_THROW(orthonormalize({Vector({1.0, 0.0}), Vector({C(0, 2), 0.0})}), Error);
}
