#include <gtest/gtest.h>

#include "support.hpp"

using namespace revtri;
using oracle::C;

namespace {

std::vector<std::pair<Method, MethodParams>> feasible_cases() {
  const BandParams band{0.1, 10, 0.1, 10};
  return {
      {Method::dm, DmParams{0.5}},
      {Method::t21, ConeParams{0.4, 0.3}},
      {Method::c22, DiskParams{0.8, 0.9}},
      {Method::c23, band},
      {Method::t31, AxisRealParams{{0.3, 0.4}}},
      {Method::t32, AxisParams{{0.3, 0.2}, {0.2, 0.1}}},
      {Method::c32, AxisDiskParams{{0.9, 0.9}, {0.95, 0.95}}},
      {Method::c33, AxisBandParams{{band, band}}},
      {Method::p41, SectorParams{0.2, 0.9}},
      {Method::p42, DiskParams{0.8, 0.9}},
      {Method::petrovich, PetrovichParams{1.0, 0.5}},
  };
}

}  // namespace

TEST(SampleFeasible, EveryMethodPassesItsCheck) {
  for (const auto& [m, p] : feasible_cases()) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const std::size_t d = is_scalar_method(m) ? 1 : 3;
      const auto s = sample_feasible({m, d, 7, p, seed});
      EXPECT_EQ(s.family.size(), 7u);
      EXPECT_TRUE(check(m, s.family, s.context, p).feasible) << method_name(m) << " seed " << seed;
    }
  }
}

TEST(SampleFeasible, Deterministic) {
  const SynthSpec spec{Method::c22, 4, 6, DiskParams{0.8, 0.85}, 42};
  EXPECT_EQ(sample_feasible(spec).family, sample_feasible(spec).family);
  SynthSpec other = spec;
  other.seed = 43;
  EXPECT_NE(sample_feasible(spec).family, sample_feasible(other).family);
}

TEST(SampleFeasible, ImpossibleGeometryFails) {
  try {
    sample_feasible({Method::c23, 2, 3, BandParams{1, 2, 1, 2}, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::generation);
  }
  EXPECT_THROW(sample_feasible({Method::c22, 2, 3, DiskParams{0.3, 0.3}, 0}), Error);
}

TEST(SampleFeasible, RejectsBadSpecs) {
  EXPECT_THROW(sample_feasible({Method::p41, 2, 3, SectorParams{0.1, 0.2}, 0}), Error);
  EXPECT_THROW(sample_feasible({Method::t21, 2, 3, DiskParams{0.8, 0.8}, 0}), Error);
  EXPECT_THROW(sample_feasible({Method::t21, 0, 3, ConeParams{0.1, 0.1}, 0}), Error);
}

TEST(SampleFeasible, UsesSuppliedReference) {
  const Reference e = Reference::normalized(Vector{C(0, 1), C(1, 1)});
  SynthSpec spec{Method::t21, 2, 5, ConeParams{0.3, 0.3}, 1};
  spec.reference = e;
  const auto s = sample_feasible(spec);
  EXPECT_EQ(s.context.reference->vector(), e.vector());
  EXPECT_TRUE(check_cone(s.family, e, {0.3, 0.3}).feasible);
}

TEST(EqualitySynthesis, T21HasTightnessOne) {
  Rng rng(9);
  const Reference e = random_reference(4, rng);
  const double t = 0.37;
  const auto f = synth_equality_t21(e, {std::cos(t), std::sin(t)}, {1.0, 0.5, 2.0});
  const auto r = cone_bound(f, e, {std::cos(t), std::sin(t)});
  ASSERT_TRUE(r.certified());
  EXPECT_NEAR(r.certificate->tightness, 1.0, 1e-12);
  EXPECT_TRUE(r.certificate->equality);
  EXPECT_NEAR(r.certificate->actual, 3.5, 1e-13);
}

TEST(EqualitySynthesis, NormalizationRequired) {
  Rng rng(1);
  const Reference e = random_reference(2, rng);
  EXPECT_THROW(synth_equality_t21(e, {0.5, 0.5}, {1.0}), Error);
  EXPECT_THROW(synth_equality_t21(e, {1.0, 0.0}, {}), Error);
  EXPECT_THROW(synth_equality_t21(e, {1.0, 0.0}, {-1.0}), Error);
}

TEST(EqualitySynthesis, AxisFamilies) {
  const auto r = synth_equality({Method::t32, 5, 4, AxisParams{{0.6, 0.0}, {0.0, 0.8}}, 3});
  const auto c = axis_bound(r.family, *r.context.axes, {{0.6, 0.0}, {0.0, 0.8}});
  ASSERT_TRUE(c.certified());
  EXPECT_TRUE(c.certificate->equality);
  const auto r31 = synth_equality({Method::t31, 3, 4, AxisRealParams{{0.6, 0.8}}, 3});
  const auto c31 = axis_real_bound(r31.family, *r31.context.axes, {{0.6, 0.8}});
  ASSERT_TRUE(c31.certified());
  EXPECT_NEAR(c31.certificate->tightness, 1.0, 1e-12);
  EXPECT_THROW(synth_equality({Method::c22, 2, 2, DiskParams{0.8, 0.8}, 0}), Error);
}

TEST(Perturbation, StaysAdmissibleAndBreaksEquality) {
  Rng rng(2);
  const Reference e = random_reference(3, rng);
  const ConeParams p{0.8, 0.6};
  const auto f = synth_equality_t21(e, p, {1.0, 1.5, 0.7});
  const auto g = perturb_equality(f, e, 1e-3, 5);
  EXPECT_TRUE(extract_cone_params(g, e).feasible);
  EXPECT_NE(f, g);
  const auto r = bound_auto(Method::t21, g, {e, {}});
  ASSERT_TRUE(r.certified());
  EXPECT_LE(r.certificate->bound, r.certificate->actual * (1 + 1e-12));
  EXPECT_EQ(perturb_equality(f, e, 0.0, 5), f);
}

TEST(BallCenter, FindsInteriorPoint) {
  const OrientedBall a{Vector({1.0, 0.0}), 1.0, 0.9};
  const OrientedBall b{Vector({0.0, 1.0}), 1.0, 0.9};
  const auto c = ball_intersection_center({a, b});
  ASSERT_TRUE(c.has_value());
  EXPECT_GT(c->slack, 0.0);
  EXPECT_LE(distance(c->point, Vector({1.0, 0.0})), 0.9 - c->slack + 1e-12);
  EXPECT_LE(distance(c->point, Vector({0.0, 1.0})), 0.9 - c->slack + 1e-12);
  const OrientedBall far{Vector({0.0, 1.0}), 1.0, 0.3};
  EXPECT_FALSE(ball_intersection_center({OrientedBall{Vector({1.0, 0.0}), 1.0, 0.3}, far}));
}
