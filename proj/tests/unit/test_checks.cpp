#include <gtest/gtest.h>

#include <cmath>

#include "bicomb/checks.hpp"
#include "bicomb/errors.hpp"

using namespace bicomb;

namespace {

std::vector<Space> spaces() { return {Space::euclidean(3), Space::star_seq(), Space::tree({1, 1, 1}), Space::tree({1, 2.5})}; }

}  // namespace

TEST(Checks, AllPassOnShippedSpaces) {
  CheckOptions opt{2000, 21, 1e-9};
  for (const Space& s : spaces()) {
    for (const auto& name : check_names()) {
      PropertyReport r = run_check(s, name, opt);
      EXPECT_TRUE(r.pass) << s.describe() << " " << name << " margin " << r.margin;
      EXPECT_GE(r.margin, 0.0);
      std::int64_t expected = name == "isometries" ? 2000 * static_cast<std::int64_t>(s.isometries().size()) : 2000;
      EXPECT_EQ(r.samples, expected) << name;
      EXPECT_EQ(r.seed, 21u);
      EXPECT_FALSE(r.witness.has_value());
    }
  }
}

TEST(Checks, MidpointPropertyIsExactOnLinearAndTreeGeodesics) {
  CheckOptions opt{2000, 2, 0.0};
  for (const Space& s : spaces()) {
    Rng rng(9);
    for (int i = 0; i < 500; ++i) {
      Point x = s.random_point(rng), y = s.random_point(rng);
      EXPECT_EQ(s.dist(s.geodesic(x, y, 0.5), s.geodesic(y, x, 0.5)), 0.0) << s.describe();
    }
  }
}

TEST(Checks, Deterministic) {
  CheckOptions opt{500, 7, 1e-9};
  for (const Space& s : spaces()) {
    PropertyReport a = check_busemann(s, opt), b = check_busemann(s, opt);
    EXPECT_EQ(a.margin, b.margin);
    EXPECT_EQ(to_json(a), to_json(b));
  }
}

// pass <=> margin <= tolerance; a zero tolerance exposes rounding and must
// come with a witness.
TEST(Checks, FailureCarriesWitness) {
  CheckOptions opt{2000, 1, 0.0};
  PropertyReport r = check_geodesic(Space::euclidean(3), opt);
  ASSERT_GT(r.margin, 0.0);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->is_object());
  EXPECT_TRUE(to_json(r).contains("witness"));
}

TEST(Checks, UnknownName) { EXPECT_THROW(run_check(Space::euclidean(1), "nope", {}), InvalidArgument); }

TEST(StrictConvexity, GapsArePositive) {
  PropertyReport r = strict_convexity_check(1000, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.details.at("min_gap").get<double>(), 0.0);
}

TEST(StrictConvexity, WorkedMidpoint) {
  // e_0 / sqrt 2 and e_1 / sqrt 2 are unit vectors; their midpoint has norm sqrt(3) / 2.
  double s = 1 / std::sqrt(2.0);
  double l1 = s, l2 = 2 * (s / 2) * (s / 2);
  EXPECT_NEAR(std::sqrt(l1 * l1 + l2), std::sqrt(3.0) / 2, 1e-15);
  auto m = Rational(1, 2) * (SparseSeq::unit(0) + SparseSeq::unit(1));
  EXPECT_EQ(m.star_norm_sq() / 2, Rational(3, 4));
}

TEST(HullSample, SinglePoint) {
  Space s = Space::tree({1, 1, 1});
  for (const auto& p : convex_hull_sample(s, {TreePoint{1, 0.4}}, 3, 50, 1)) EXPECT_EQ(p, (Point{TreePoint{1, 0.4}}));
}

TEST(HullSample, SegmentInPlane) {
  Space s = Space::euclidean(2);
  for (const auto& p : convex_hull_sample(s, {EuclidPoint{{0, 0}}, EuclidPoint{{1, 0}}}, 2, 500, 2)) {
    const auto& c = std::get<EuclidPoint>(p).coords;
    EXPECT_EQ(c[1], 0.0);
    EXPECT_GE(c[0], 0.0);
    EXPECT_LE(c[0], 1.0);
  }
}

TEST(HullSample, StarNormBounds) {
  Space s = Space::star_seq();
  std::vector<Point> A = {SparseSeq::unit(0), SparseSeq::unit(1), SparseSeq::unit(2)};
  for (const auto& p : convex_hull_sample(s, A, 3, 2000, 3)) {
    Rational n2 = std::get<SparseSeq>(p).star_norm_sq();
    EXPECT_GE(n2, 1);
    EXPECT_LE(n2, 2);
  }
}

TEST(HullSample, TreeStaysInSpannedSubtree) {
  Space s = Space::tree({1, 1, 1});
  for (const auto& p : convex_hull_sample(s, {TreePoint{0, 1}, TreePoint{1, 0.5}}, 4, 500, 4))
    EXPECT_NE(std::get<TreePoint>(p).leg, 2);
}

TEST(HullSample, Errors) {
  Space s = Space::euclidean(1);
  EXPECT_THROW(convex_hull_sample(s, {}, 2, 1, 0), InvalidArgument);
  EXPECT_THROW(convex_hull_sample(s, {EuclidPoint{{0}}}, 0, 1, 0), InvalidArgument);
  EXPECT_THROW(convex_hull_sample(s, {EuclidPoint{{0}}}, 1, 0, 0), InvalidArgument);
}
