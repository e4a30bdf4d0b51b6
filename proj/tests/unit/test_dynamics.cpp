#include <gtest/gtest.h>

#include <cmath>

#include "bicomb/dynamics.hpp"
#include "bicomb/errors.hpp"
#include "bicomb/wasserstein.hpp"

using namespace bicomb;

namespace {

Point E(std::vector<double> c) { return EuclidPoint{std::move(c)}; }

const Space kPlane = Space::euclidean(2);
const Space kStar = Space::star_seq();

// Direct count over every window start, no sliding.
double naive_density(const std::vector<std::uint8_t>& ind, std::int64_t K, std::int64_t L, std::int64_t off) {
  std::int64_t best = 0;
  for (std::int64_t l = 0; l <= L; ++l) {
    std::int64_t c = 0;
    for (std::int64_t i = 0; i < K; ++i) c += ind[off + l + i];
    best = std::max(best, c);
  }
  return static_cast<double>(best) / static_cast<double>(K);
}

std::vector<std::uint8_t> periodic(std::int64_t H, std::int64_t p, std::vector<std::int64_t> residues) {
  std::vector<std::uint8_t> v(H, 0);
  for (std::int64_t k = 0; k < H; ++k)
    for (auto r : residues)
      if (k % p == r) v[k] = 1;
  return v;
}

}  // namespace

TEST(Orbit, WorkedValues) {
  OrbitTrace r = orbit(kPlane, Isometry::rotation_turns(Rational(1, 3)), E({1, 0}), 3);
  ASSERT_EQ(r.horizon(), 3);
  EXPECT_EQ(r.points[0], E({1, 0}));
  EXPECT_EQ(std::get<EuclidPoint>(r.points[1]).coords[0], -0.5);
  EXPECT_DOUBLE_EQ(std::get<EuclidPoint>(r.points[1]).coords[1], std::sqrt(3.0) / 2);
  EXPECT_DOUBLE_EQ(std::get<EuclidPoint>(r.points[2]).coords[1], -std::sqrt(3.0) / 2);

  OrbitTrace s = orbit(kStar, Isometry::shift(), SparseSeq::unit(0), 3);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(s.points[k], (Point{SparseSeq::unit(k)}));

  OrbitTrace t = orbit(kPlane, Isometry::translation({1, 0}), E({0, 0}), 3);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(t.points[k], E({double(k), 0}));

  EXPECT_THROW(orbit(kPlane, Isometry::shift(), E({0, 0}), 3), KindMismatch);
  EXPECT_THROW(orbit(kPlane, Isometry::identity(), E({0, 0}), 0), InvalidArgument);
}

TEST(Orbit, ExactlyPeriodic) {
  OrbitTrace r = orbit(kPlane, Isometry::rotation_turns(Rational(1, 5)), E({0.3, 0.4}), 51);
  for (int k = 0; k + 5 < 51; ++k) EXPECT_EQ(r.points[k], r.points[k + 5]);
}

TEST(Orbit, VisitSet) {
  auto ball = TargetSet::ball(E({1, 0}), 0.1);
  OrbitTrace r = orbit(kPlane, Isometry::rotation_turns(Rational(1, 4)), E({1, 0}), 12, ball);
  std::vector<std::uint8_t> want = {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0};
  EXPECT_EQ(r.visits, want);
  auto pts = TargetSet::points({E({0, 1})});
  EXPECT_EQ(orbit(kPlane, Isometry::rotation_turns(Rational(1, 4)), E({1, 0}), 4, pts).visits,
            (std::vector<std::uint8_t>{0, 1, 0, 0}));
}

TEST(Density, WorkedValues) {
  auto mult3 = periodic(600, 3, {0});
  DensityEstimate d = banach_density_estimate(mult3, 300, 300);
  EXPECT_EQ(d.best_count, 100);
  EXPECT_EQ(d.exact(), Rational(1, 3));
  EXPECT_EQ(banach_density_estimate(std::vector<std::uint8_t>(50, 1), 20, 30).value, 1.0);
  std::vector<std::uint8_t> finite(2000, 0);
  finite[0] = finite[1] = 1;
  EXPECT_LE(banach_density_estimate(finite, 1000, 1000).value, 2.0 / 1000);
  EXPECT_THROW(banach_density_estimate(mult3, 300, 301), InvalidArgument);
  EXPECT_THROW(banach_density_estimate(mult3, 0, 1), InvalidArgument);
}

TEST(Density, MatchesNaiveCount) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    std::int64_t H = 20 + static_cast<std::int64_t>(rng() % 200);
    std::vector<std::uint8_t> ind(H);
    int density = 1 + static_cast<int>(rng() % 9);
    for (auto& v : ind) v = (rng() % 10) < static_cast<unsigned>(density);
    std::int64_t off = static_cast<std::int64_t>(rng() % 10);
    std::int64_t K = 1 + static_cast<std::int64_t>(rng() % (H - off - 1));
    std::int64_t L = static_cast<std::int64_t>(rng() % (H - off - K + 1));
    EXPECT_EQ(banach_density_estimate(ind, K, L, off).value, naive_density(ind, K, L, off));
  }
}

TEST(Density, PeriodicConverges) {
  for (std::int64_t p : {2, 3, 7, 10})
    for (std::int64_t K : {50, 200, 1000}) {
      auto ind = periodic(3 * K, p, {0, 1});
      double want = 2.0 / static_cast<double>(p);
      EXPECT_LE(std::fabs(banach_density_estimate(ind, K, K).value - want), 1.0 / K + 1e-15) << p << " " << K;
    }
}

TEST(Density, WindowFamiliesAgree) {
  auto ind = periodic(5000, 7, {1, 4, 5});
  for (std::int64_t K : {100, 700, 1000}) {
    double a = banach_density_estimate(ind, K, K, 0).value;
    double b = banach_density_estimate(ind, K, K, 1234).value;
    EXPECT_LE(std::fabs(a - b), 2.0 / K);
  }
}

TEST(EmpiricalMeasure, WorkedValues) {
  OrbitTrace r = orbit(kPlane, Isometry::rotation_turns(Rational(1, 3)), E({1, 0}), 9);
  AtomicMeasure mu = empirical_measure(r, 0, 3);
  ASSERT_EQ(mu.size(), 3u);
  for (const auto& a : mu.atoms()) EXPECT_EQ(a.mass, Rational(1, 3));
  EXPECT_EQ(empirical_measure(r, 0, 9).size(), 3u);
  AtomicMeasure one = empirical_measure(r, 4, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.atoms()[0].point, r.points[4]);

  OrbitTrace s = orbit(kStar, Isometry::shift(), SparseSeq::unit(0), 8);
  AtomicMeasure four = empirical_measure(s, 0, 4);
  ASSERT_EQ(four.size(), 4u);
  for (const auto& a : four.atoms()) EXPECT_EQ(a.mass, Rational(1, 4));
  EXPECT_THROW(empirical_measure(s, 6, 3), InvalidArgument);
  EXPECT_THROW(empirical_measure(s, 0, 0), InvalidArgument);
}

TEST(InvarianceResidual, WorkedValues) {
  Isometry rot = Isometry::rotation_turns(Rational(1, 3));
  OrbitTrace r = orbit(kPlane, rot, E({1, 0}), 3);
  EXPECT_LE(invariance_residual(rot, empirical_measure(r, 0, 3)), 1e-15);

  OrbitTrace s = orbit(kStar, Isometry::shift(), SparseSeq::unit(0), 101);
  for (std::int64_t k : {1, 2, 10, 100})
    EXPECT_NEAR(invariance_residual(Isometry::shift(), empirical_measure(s, 0, k)), std::sqrt(6.0) / k, 1e-12);
  EXPECT_EQ(invariance_residual(rot, AtomicMeasure::dirac(kPlane, E({1, 0}))), kPlane.dist(E({1, 0}), r.points[1]));
}

TEST(InvarianceResidual, CesaroBound) {
  Rng rng(2);
  std::vector<std::pair<Space, Isometry>> cases = {
      {kPlane, Isometry::rotation_turns(Rational(2, 7))},
      {kPlane, Isometry::translation({0.3, -0.1})},
      {kPlane, Isometry::compose({Isometry::rotation_angle(1.0), Isometry::translation({1, 0})})},
      {kStar, Isometry::shift(2)},
      {Space::tree({1, 1, 1}), Isometry::leg_permutation({1, 2, 0})}};
  for (const auto& [space, iso] : cases) {
    Point x0 = space.random_point(rng);
    OrbitTrace tr = orbit(space, iso, x0, 1001);
    for (std::int64_t k : {1, 5, 50, 1000}) {
      double bound = space.dist(x0, tr.points[k]) / static_cast<double>(k);
      EXPECT_LE(invariance_residual(iso, empirical_measure(tr, 0, k)), bound + 1e-9) << iso.describe() << " k=" << k;
    }
  }
}

TEST(FixedPoint, RotationConverges) {
  FixedPointParams p;
  p.schedule = {3, 30, 300};
  FixedPointResult r = fixed_point_solve(kPlane, Isometry::rotation_turns(Rational(1, 3)), E({1, 0}),
                                         TargetSet::ball(E({0, 0}), 1.0), p);
  EXPECT_EQ(r.status, FixedPointStatus::converged);
  ASSERT_TRUE(r.point.has_value());
  EXPECT_LE(kPlane.dist(*r.point, E({0, 0})), 1e-12);
  for (double res : r.residual_series) EXPECT_LE(res, 1e-10);
  EXPECT_EQ(r.density.value, 1.0);
}

TEST(FixedPoint, RecursiveRouteOnTree) {
  Space tree = Space::tree({1, 1, 1});
  FixedPointParams p;
  p.schedule = {3, 30};
  p.route = BarycenterRoute::recursive;
  FixedPointResult r = fixed_point_solve(tree, Isometry::leg_permutation({1, 2, 0}), TreePoint{0, 0.6},
                                         TargetSet::ball(TreePoint{0, 0.6}, 0.1), p);
  EXPECT_EQ(r.status, FixedPointStatus::converged) << r.reason;
  EXPECT_LE(tree.dist(*r.point, TreePoint{}), 1e-10);
}

TEST(FixedPoint, ShiftNeverConverges) {
  FixedPointResult r = fixed_point_solve(kStar, Isometry::shift(), SparseSeq::unit(0),
                                         TargetSet::ball(SparseSeq(), 1.0));
  EXPECT_NE(r.status, FixedPointStatus::converged);
  ASSERT_EQ(r.residual_series.size(), 3u);
  const std::int64_t N[] = {10, 100, 1000};
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.residual_series[i], std::sqrt(6.0) / N[i], 1e-12);
  EXPECT_EQ(r.density.value, 0.0);
  // x_N - x_2N has l1 norm 1
  auto x10 = std::get<SparseSeq>(r.steps[0].point), x100 = std::get<SparseSeq>(r.steps[1].point);
  EXPECT_EQ((x10 - x100).l1_norm(), Rational(9, 5));
}

TEST(FixedPoint, Identity) {
  Rng rng(3);
  for (const Space& s : {kPlane, kStar, Space::tree({1, 2})}) {
    Point x0 = s.random_point(rng);
    FixedPointParams p;
    p.schedule = {1, 5, 20};
    FixedPointResult r = fixed_point_solve(s, Isometry::identity(), x0, TargetSet::ball(x0, 0.5), p);
    EXPECT_EQ(r.status, FixedPointStatus::converged) << s.describe();
    EXPECT_TRUE(s.same_point(*r.point, x0));
    for (double res : r.residual_series) EXPECT_EQ(res, 0.0);
  }
}

TEST(FixedPoint, TranslationDiverges) {
  FixedPointResult r = fixed_point_solve(kPlane, Isometry::translation({1, 0}), E({0, 0}),
                                         TargetSet::ball(E({0, 0}), 1.0));
  EXPECT_NE(r.status, FixedPointStatus::converged);
  EXPECT_FALSE(r.reason.empty());
}

// d(phi x_N, x_N) <= W1(phi_* mu_N, mu_N) + 2e-7
TEST(FixedPoint, ResidualChain) {
  Space tree = Space::tree({1, 1, 1});
  Isometry phi = Isometry::leg_permutation({1, 0, 2});
  Point x0 = TreePoint{0, 0.8};
  OrbitTrace tr = orbit(tree, phi, x0, 8);
  FixedPointParams p;
  p.schedule = {2, 4, 8};
  p.route = BarycenterRoute::recursive;
  FixedPointResult r = fixed_point_solve(tree, phi, x0, TargetSet::ball(x0, 0.1), p);
  for (const auto& step : r.steps)
    EXPECT_LE(step.residual, invariance_residual(phi, empirical_measure(tr, 0, step.n)) + 2e-7);
}

TEST(Certificate, Rotation) {
  for (int q : {3, 5, 7}) {
    Point x0 = E({1, 0});
    auto B = TargetSet::ball(x0, 0.1);
    OrbitTrace tr = orbit(kPlane, Isometry::rotation_turns(Rational(1, q)), x0, 20 * q, B);
    OrbitBoundCertificate c = orbit_bound_certificate(tr, B.diameter_bound(kPlane));
    ASSERT_TRUE(c.found) << c.reason;
    EXPECT_EQ(c.k0, q);
    EXPECT_LE(c.C, 2.0);
    EXPECT_TRUE(c.holds);
    for (const auto& p : tr.points) EXPECT_LE(kPlane.dist(x0, p), c.bound);
  }
}

TEST(Certificate, Identity) {
  Point x0 = E({0.5, 0.5});
  auto B = TargetSet::ball(x0, 0.1);
  OrbitTrace tr = orbit(kPlane, Isometry::identity(), x0, 50, B);
  OrbitBoundCertificate c = orbit_bound_certificate(tr, B.diameter_bound(kPlane));
  ASSERT_TRUE(c.found);
  EXPECT_EQ(c.C, 0.0);
  EXPECT_EQ(c.max_observed, 0.0);
  EXPECT_TRUE(c.holds);
}

TEST(Certificate, TranslationFails) {
  auto B = TargetSet::ball(E({0, 0}), 1.0);
  OrbitTrace tr = orbit(kPlane, Isometry::translation({1, 0}), E({0, 0}), 400, B);
  OrbitBoundCertificate c = orbit_bound_certificate(tr, B.diameter_bound(kPlane));
  EXPECT_FALSE(c.found);
  EXPECT_FALSE(c.reason.empty());
}

TEST(Certificate, EmptyVisitSet) {
  auto B = TargetSet::ball(E({5, 5}), 0.1);
  OrbitTrace tr = orbit(kPlane, Isometry::rotation_turns(Rational(1, 4)), E({1, 0}), 40, B);
  EXPECT_FALSE(orbit_bound_certificate(tr, B.diameter_bound(kPlane)).found);
  OrbitTrace bare = orbit(kPlane, Isometry::identity(), E({1, 0}), 4);
  EXPECT_THROW(orbit_bound_certificate(bare, 0.2), InvalidArgument);
}
