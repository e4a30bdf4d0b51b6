#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicomb/barycenter.hpp"
#include "bicomb/isometry.hpp"
#include "bicomb/measure.hpp"
#include "bicomb/space.hpp"

namespace bicomb {

inline constexpr double kTargetTolerance = 1e-12;

// Closed ball, or a finite set of points matched within `tol`.
class TargetSet {
 public:
  static TargetSet ball(Point center, double radius);
  static TargetSet points(std::vector<Point> pts, double tol = 1e-9);

  bool contains(const Space& space, const Point& x) const;
  double diameter_bound(const Space& space) const;
  bool is_ball() const { return is_ball_; }
  const Point& center() const { return pts_.front(); }
  double radius() const { return radius_; }
  const std::vector<Point>& members() const { return pts_; }

 private:
  bool is_ball_ = true;
  std::vector<Point> pts_;
  double radius_ = 0.0;
};

struct OrbitTrace {
  Space space;
  Isometry iso;
  Point x0;
  std::vector<Point> points;          // points[k] = phi^k(x0), k < horizon
  std::vector<std::uint8_t> visits;   // indicator of D = {k : phi^k(x0) in B}; empty without a target
  std::int64_t horizon() const { return static_cast<std::int64_t>(points.size()); }
};

OrbitTrace orbit(const Space& space, const Isometry& iso, const Point& x0, std::int64_t horizon);
OrbitTrace orbit(const Space& space, const Isometry& iso, const Point& x0, std::int64_t horizon,
                 const TargetSet& target);

struct DensityEstimate {
  double value = 0.0;             // best_count / window
  std::int64_t best_count = 0;
  std::int64_t window = 0;        // K
  std::int64_t shifts = 0;        // L
  std::int64_t best_shift = 0;
  Rational exact() const;
};

// max over l in [0, L] of |D ∩ {offset+l, ..., offset+l+K-1}| / K.
DensityEstimate banach_density_estimate(const std::vector<std::uint8_t>& indicator, std::int64_t K, std::int64_t L,
                                        std::int64_t offset = 0);
DensityEstimate banach_density_estimate(const OrbitTrace& trace, std::int64_t K, std::int64_t L,
                                        std::int64_t offset = 0);

// Uniform measure on points[l], ..., points[l+k-1].
AtomicMeasure empirical_measure(const OrbitTrace& trace, std::int64_t l, std::int64_t k);

// W1(phi_* mu, mu)
double invariance_residual(const Isometry& phi, const AtomicMeasure& mu);

enum class BarycenterRoute {
  automatic,  // closed-form mean on normed kinds, recursion on trees
  recursive,
  mean,
};

enum class FixedPointStatus { converged, inconclusive, diverged };
std::string to_string(FixedPointStatus s);
std::string to_string(BarycenterRoute r);

struct FixedPointParams {
  std::vector<std::int64_t> schedule{10, 100, 1000};
  double tol = 1e-6;
  BarycenterRoute route = BarycenterRoute::automatic;
  BaryConfig bary;
  std::int64_t density_window = 0;  // 0: half the horizon
  std::int64_t density_shifts = 0;  // 0: the rest of the horizon
};

struct FixedPointStep {
  std::int64_t n = 0;
  Point point;
  double residual = 0.0;     // d(phi x, x)
  double cauchy_gap = 0.0;   // distance to the previous step's point
  int k_used = 0;            // 0 for the closed-form mean
  std::string error;         // barycenter failure, if any
};

struct FixedPointResult {
  FixedPointStatus status = FixedPointStatus::inconclusive;
  std::optional<Point> point;
  std::vector<FixedPointStep> steps;
  std::vector<double> residual_series;
  DensityEstimate density;
  std::string reason;
};

FixedPointResult fixed_point_solve(const Space& space, const Isometry& phi, const Point& x0, const TargetSet& target,
                                   const FixedPointParams& params = {});

struct OrbitBoundCertificate {
  bool found = false;
  std::int64_t k0 = -1;
  double C = 0.0;            // max d(x0, phi^k x0) over k <= k0
  double diameter = 0.0;     // bound on diam(B)
  double bound = 0.0;        // diameter + C
  double max_observed = 0.0; // max d(x0, phi^k x0) over the trace
  bool holds = false;        // every traced point within bound
  std::string reason;
};

// Smallest k0 <= k0_limit such that every block {k, ..., k+k0} inside the
// trace meets the positive return times {d - d' > 0 : d, d' in D}.
// k0_limit < 0 selects horizon / 2.
OrbitBoundCertificate orbit_bound_certificate(const OrbitTrace& trace, double diameter, std::int64_t k0_limit = -1);

}  // namespace bicomb
