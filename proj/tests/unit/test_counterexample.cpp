#include <gtest/gtest.h>

#include <cmath>

#include "bicomb/counterexample.hpp"
#include "bicomb/errors.hpp"

using namespace bicomb;

TEST(HullPoint, WorkedValues) {
  HullSample v = hull_point({Rational(1)}, {0});
  EXPECT_EQ(v.x, SparseSeq::unit(0));
  EXPECT_EQ(v.x.star_norm_sq(), 2);
  for (int n : {1, 2, 5, 17, 100}) {
    std::vector<Rational> a(n, Rational(1, n));
    std::vector<std::int64_t> off(n);
    for (int i = 0; i < n; ++i) off[i] = i;
    HullSample s = hull_point(a, off);
    EXPECT_EQ(s.x.star_norm_sq(), 1 + Rational(1, n)) << n;
    EXPECT_GT(s.x.star_norm_sq(), 1);
  }
}

TEST(HullPoint, Errors) {
  EXPECT_THROW(hull_point({Rational(1, 2), Rational(1, 3)}, {0, 1}), InvalidArgument);
  EXPECT_THROW(hull_point({Rational(3, 2), Rational(-1, 2)}, {0, 1}), InvalidArgument);
  EXPECT_THROW(hull_point({Rational(1, 2), Rational(1, 2)}, {4, 4}), InvalidArgument);
  EXPECT_THROW(hull_point({}, {}), InvalidArgument);
}

// |x|_*^2 = 1 + sum alpha_i^2, so 1 < |x|_* <= sqrt 2.
TEST(HullPoint, NormIdentity) {
  Rng rng(1);
  for (int i = 0; i < 5000; ++i) {
    HullSample s = random_hull_point(rng, 20);
    Rational sq = 0;
    for (const auto& a : s.coeffs) sq += a * a;
    EXPECT_EQ(s.x.star_norm_sq(), 1 + sq);
    EXPECT_GT(s.x.star_norm_sq(), 1);
    EXPECT_LE(s.x.star_norm_sq(), 2);
    EXPECT_EQ(s.x.support_size(), s.offsets.size());
  }
}

TEST(HullPoint, ShiftMapsHullToHull) {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    HullSample s = random_hull_point(rng, 10);
    std::vector<std::int64_t> moved = s.offsets;
    for (auto& o : moved) ++o;
    EXPECT_EQ(s.x.shifted(1), hull_point(s.coeffs, moved).x);
  }
}

TEST(Displacement, WorkedValues) {
  DisplacementDecay d1 = displacement_decay(1);
  EXPECT_EQ(d1.l1, 2);
  EXPECT_EQ(d1.star_sq, 6);
  DisplacementDecay d2 = displacement_decay(2);
  EXPECT_EQ(d2.l1, 1);
  EXPECT_EQ(d2.star_sq, ratio(6, 4));
  DisplacementDecay d1000 = displacement_decay(1000);
  EXPECT_EQ(d1000.star_sq, ratio(6, 1000000));
  EXPECT_NEAR(d1000.star, std::sqrt(6.0) / 1000, 1e-18);
  EXPECT_GT(d1000.star, 0.0);
  EXPECT_THROW(displacement_decay(0), InvalidArgument);
}

TEST(Displacement, ScalesLikeOneOverN) {
  for (std::int64_t n = 1; n <= 300; ++n) {
    DisplacementDecay d = displacement_decay(n);
    EXPECT_EQ(d.l1 * n, 2);
    EXPECT_EQ(d.star_sq * n * n, 6);
  }
}

// Uniform weights are not the minimizers of |Tx - x|_* at support 7: lowering
// the two end weights beats 6/49.
TEST(Displacement, UniformIsNotMinimalAtSevenAtoms) {
  Rational end(2, 15), mid(11, 75);
  HullSample s = hull_point({end, mid, mid, mid, mid, mid, end}, {0, 1, 2, 3, 4, 5, 6});
  Rational d = (s.x.shifted(1) - s.x).star_norm_sq();
  // (2 mid)^2 + 2 end^2 + 2 (mid - end)^2
  EXPECT_EQ(d, 4 * mid * mid + 2 * end * end + 2 * (mid - end) * (mid - end));
  EXPECT_LT(d, Rational(6, 49));
}

TEST(Verify, DefaultRunPasses) {
  VerificationBundle b = verify_counterexample(2000, 20, 7);
  EXPECT_TRUE(b.pass);
  EXPECT_EQ(b.seed, 7u);
  ASSERT_EQ(b.checks.size(), 7u);
  const char* names[] = {"strict-convexity", "norm-equivalence", "hull-bounds", "shift-invariance",
                         "zero-excluded",    "displacement-decay", "busemann-hull"};
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(b.checks[i].name, names[i]);
    EXPECT_TRUE(b.checks[i].pass) << names[i];
  }
  EXPECT_EQ(b.checks[2].details.at("max_star_norm").get<double>(), std::sqrt(2.0));
  EXPECT_GE(b.checks[2].details.at("min_star_norm").get<double>(), 1.0);
}

TEST(Verify, Deterministic) {
  VerificationBundle a = verify_counterexample(300, 8, 3), b = verify_counterexample(300, 8, 3);
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(to_json(a.checks[i]), to_json(b.checks[i]));
}
