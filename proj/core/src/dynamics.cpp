#include "bicomb/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "bicomb/errors.hpp"
#include "bicomb/wasserstein.hpp"

namespace bicomb {

TargetSet TargetSet::ball(Point center, double radius) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) throw InvalidArgument("ball radius must be finite and >= 0");
  TargetSet t;
  t.is_ball_ = true;
  t.pts_.push_back(std::move(center));
  t.radius_ = radius;
  return t;
}

TargetSet TargetSet::points(std::vector<Point> pts, double tol) {
  if (pts.empty()) throw InvalidArgument("empty target set");
  TargetSet t;
  t.is_ball_ = false;
  t.pts_ = std::move(pts);
  t.radius_ = tol;
  return t;
}

bool TargetSet::contains(const Space& space, const Point& x) const {
  if (is_ball_) return space.dist(x, pts_.front()) <= radius_ + kTargetTolerance;
  return std::any_of(pts_.begin(), pts_.end(), [&](const Point& p) { return space.dist(x, p) <= radius_; });
}

double TargetSet::diameter_bound(const Space& space) const {
  if (is_ball_) return 2.0 * radius_;
  double d = 0.0;
  for (std::size_t i = 0; i < pts_.size(); ++i)
    for (std::size_t j = i + 1; j < pts_.size(); ++j) d = std::max(d, space.dist(pts_[i], pts_[j]));
  return d + 2.0 * radius_;
}

Rational DensityEstimate::exact() const {
  Rational q(best_count, window);
  q.canonicalize();
  return q;
}

OrbitTrace orbit(const Space& space, const Isometry& iso, const Point& x0, std::int64_t horizon) {
  if (horizon < 1) throw InvalidArgument("orbit horizon must be positive");
  validate_isometry(space, iso);
  OrbitTrace t{space, iso, space.canonical(x0), {}, {}};
  t.points.reserve(static_cast<std::size_t>(horizon));
  t.points.push_back(t.x0);
  // Closed-form powers keep periodic orbits exactly periodic.
  const bool closed_form = !std::holds_alternative<CompositionIso>(iso.variant());
  for (std::int64_t k = 1; k < horizon; ++k) {
    if (closed_form) t.points.push_back(apply_isometry(space, iso.power(k), t.x0));
    else t.points.push_back(apply_isometry(space, iso, t.points.back()));
  }
  return t;
}

OrbitTrace orbit(const Space& space, const Isometry& iso, const Point& x0, std::int64_t horizon,
                 const TargetSet& target) {
  OrbitTrace t = orbit(space, iso, x0, horizon);
  t.visits.reserve(t.points.size());
  for (const auto& p : t.points) t.visits.push_back(target.contains(space, p) ? 1 : 0);
  return t;
}

DensityEstimate banach_density_estimate(const std::vector<std::uint8_t>& indicator, std::int64_t K, std::int64_t L,
                                        std::int64_t offset) {
  if (K < 1) throw InvalidArgument("density window must be positive");
  if (L < 0 || offset < 0) throw InvalidArgument("negative shift range");
  if (offset + L + K > static_cast<std::int64_t>(indicator.size()))
    throw InvalidArgument("density windows run past the horizon");
  DensityEstimate est;
  est.window = K;
  est.shifts = L;
  std::int64_t count = 0;
  for (std::int64_t i = offset; i < offset + K; ++i) count += indicator[i];
  est.best_count = count;
  est.best_shift = 0;
  for (std::int64_t l = 1; l <= L; ++l) {
    count += indicator[offset + l + K - 1] - indicator[offset + l - 1];
    if (count > est.best_count) {
      est.best_count = count;
      est.best_shift = l;
    }
  }
  est.value = static_cast<double>(est.best_count) / static_cast<double>(K);
  return est;
}

DensityEstimate banach_density_estimate(const OrbitTrace& trace, std::int64_t K, std::int64_t L,
                                        std::int64_t offset) {
  if (trace.visits.empty()) throw InvalidArgument("orbit trace has no target set");
  return banach_density_estimate(trace.visits, K, L, offset);
}

AtomicMeasure empirical_measure(const OrbitTrace& trace, std::int64_t l, std::int64_t k) {
  if (k < 1 || l < 0 || l + k > trace.horizon()) throw InvalidArgument("empirical window outside the trace");
  std::vector<Point> pts(trace.points.begin() + l, trace.points.begin() + l + k);
  return AtomicMeasure::uniform(trace.space, pts);
}

double invariance_residual(const Isometry& phi, const AtomicMeasure& mu) { return w1_atomic(pushforward(phi, mu), mu); }

std::string to_string(FixedPointStatus s) {
  switch (s) {
    case FixedPointStatus::converged: return "converged";
    case FixedPointStatus::inconclusive: return "inconclusive";
    case FixedPointStatus::diverged: return "diverged";
  }
  return "?";
}

std::string to_string(BarycenterRoute r) {
  switch (r) {
    case BarycenterRoute::automatic: return "auto";
    case BarycenterRoute::recursive: return "recursive";
    case BarycenterRoute::mean: return "mean";
  }
  return "?";
}

FixedPointResult fixed_point_solve(const Space& space, const Isometry& phi, const Point& x0, const TargetSet& target,
                                   const FixedPointParams& params) {
  if (params.schedule.empty()) throw InvalidArgument("empty schedule");
  for (std::size_t i = 0; i < params.schedule.size(); ++i)
    if (params.schedule[i] < 1 || (i && params.schedule[i] <= params.schedule[i - 1]))
      throw InvalidArgument("schedule must be positive and increasing");
  const std::int64_t H = params.schedule.back();
  OrbitTrace trace = orbit(space, phi, x0, H, target);

  FixedPointResult res;
  std::int64_t K = params.density_window > 0 ? params.density_window : std::max<std::int64_t>(1, H / 2);
  std::int64_t L = params.density_shifts > 0 ? params.density_shifts : H - K;
  res.density = banach_density_estimate(trace, K, L);

  BarycenterRoute route = params.route;
  if (route == BarycenterRoute::automatic)
    route = space.kind() == SpaceKind::tree ? BarycenterRoute::recursive : BarycenterRoute::mean;

  for (std::int64_t n : params.schedule) {
    FixedPointStep step;
    step.n = n;
    AtomicMeasure mu = empirical_measure(trace, 0, n);
    try {
      if (route == BarycenterRoute::mean) {
        step.point = banach_mean(mu);
      } else {
        BetaResult b = beta(mu, params.bary);
        step.point = b.point;
        step.k_used = b.k_used;
      }
    } catch (const Error& e) {
      step.error = e.what();
      res.steps.push_back(std::move(step));
      res.status = FixedPointStatus::inconclusive;
      res.reason = "barycenter failed at N = " + std::to_string(n) + ": " + res.steps.back().error;
      return res;
    }
    step.residual = space.dist(apply_isometry(space, phi, step.point), step.point);
    step.cauchy_gap = res.steps.empty() ? 0.0 : space.dist(step.point, res.steps.back().point);
    res.residual_series.push_back(step.residual);
    res.steps.push_back(std::move(step));
  }
  res.point = res.steps.back().point;

  const FixedPointStep& last = res.steps.back();
  bool small = last.residual < params.tol;
  bool cauchy = res.steps.size() < 2 || last.cauchy_gap < params.tol;
  bool dense = res.density.best_count > 0;
  if (small && cauchy && dense) {
    res.status = FixedPointStatus::converged;
    res.reason = "residual and Cauchy gap below tolerance, positive density";
  } else if (!small && res.residual_series.size() > 1 && last.residual >= res.residual_series.front()) {
    res.status = FixedPointStatus::diverged;
    res.reason = "residual does not decrease";
  } else {
    res.status = FixedPointStatus::inconclusive;
    std::vector<std::string> why;
    if (!small) why.push_back("residual above tolerance");
    if (!cauchy) why.push_back("iterates are not Cauchy");
    if (!dense) why.push_back("target has zero upper density along the orbit");
    for (std::size_t i = 0; i < why.size(); ++i) res.reason += (i ? "; " : "") + why[i];
  }
  return res;
}

OrbitBoundCertificate orbit_bound_certificate(const OrbitTrace& trace, double diameter, std::int64_t k0_limit) {
  if (trace.visits.empty()) throw InvalidArgument("orbit trace has no target set");
  if (!(diameter >= 0.0)) throw InvalidArgument("target diameter must be non-negative");
  const std::int64_t H = trace.horizon();
  if (k0_limit < 0) k0_limit = H / 2;
  OrbitBoundCertificate cert;
  cert.diameter = diameter;
  std::vector<std::int64_t> D;
  for (std::int64_t k = 0; k < H; ++k)
    if (trace.visits[k]) D.push_back(k);
  if (D.empty()) {
    cert.reason = "the orbit never visits the target";
    return cert;
  }
  std::vector<std::uint8_t> returns(static_cast<std::size_t>(H), 0);
  for (std::size_t i = 0; i < D.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) returns[D[i] - D[j]] = 1;
  // Longest run of integers in [0, H) missed by the return times.
  std::int64_t longest = 0, run = 0;
  for (std::int64_t k = 0; k < H; ++k) {
    run = returns[k] ? 0 : run + 1;
    longest = std::max(longest, run);
  }
  if (longest > k0_limit) {
    cert.reason = "return times leave a gap of " + std::to_string(longest) + " > " + std::to_string(k0_limit);
    return cert;
  }
  cert.found = true;
  cert.k0 = longest;
  for (std::int64_t k = 0; k <= cert.k0 && k < H; ++k)
    cert.C = std::max(cert.C, trace.space.dist(trace.x0, trace.points[k]));
  cert.bound = cert.diameter + cert.C;
  for (const auto& p : trace.points) cert.max_observed = std::max(cert.max_observed, trace.space.dist(trace.x0, p));
  cert.holds = cert.max_observed <= cert.bound + kTargetTolerance;
  if (!cert.holds) cert.reason = "an orbit point exceeds the bound";
  return cert;
}

}  // namespace bicomb
