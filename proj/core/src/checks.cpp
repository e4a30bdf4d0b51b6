#include "bicomb/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "bicomb/errors.hpp"
#include "bicomb/io.hpp"

namespace bicomb {

namespace {

// Geodesic parameter: exact rational on star-seq, double elsewhere.
struct Param {
  Rational q;
  double d = 0.0;
};

Param sample_param(const Space& space, Rng& rng) {
  if (space.kind() == SpaceKind::star_seq) {
    std::uniform_int_distribution<long> den(1, 32);
    long b = den(rng);
    std::uniform_int_distribution<long> num(0, b);
    Rational q(num(rng), b);
    q.canonicalize();
    return {q, to_double(q)};
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double t = u(rng);
  return {Rational(0), t};
}

Point geo(const Space& space, const Point& x, const Point& y, const Param& t) {
  if (space.kind() == SpaceKind::star_seq) return space.geodesic(x, y, t.q);
  return space.geodesic(x, y, t.d);
}

json param_json(const Space& space, const Param& t) {
  if (space.kind() == SpaceKind::star_seq) return to_string(t.q);
  return t.d;
}

// Collects the worst violation. Samplers call keep() with a witness builder
// that is evaluated only when the sample becomes the reported witness.
class Sink {
 public:
  explicit Sink(double tolerance) : tolerance_(tolerance) {}
  template <class F>
  double keep(double violation, F&& witness) {
    if (violation > margin_) {
      margin_ = violation;
      if (violation > tolerance_) worst_ = witness();
    }
    return violation;
  }
  double margin() const { return margin_; }
  const std::optional<json>& worst() const { return worst_; }

 private:
  double tolerance_;
  double margin_ = 0.0;
  std::optional<json> worst_;
};

// Runs `sample` opt.samples times.
PropertyReport run_sampled(const std::string& name, const CheckOptions& opt,
                           const std::function<void(Rng&, Sink&)>& sample) {
  PropertyReport r;
  r.name = name;
  r.seed = opt.seed;
  r.tolerance = opt.tolerance;
  Rng rng(opt.seed);
  Sink sink(opt.tolerance);
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    sample(rng, sink);
    ++r.samples;
  }
  r.margin = sink.margin();
  json worst = sink.worst().value_or(json());
  r.pass = r.margin <= opt.tolerance;
  if (!r.pass) r.witness = worst;
  return r;
}

}  // namespace

PropertyReport check_conical(const Space& space, const CheckOptions& opt) {
  return run_sampled("conical", opt, [&](Rng& rng, Sink& sink) {
    Point x = space.random_point(rng), y = space.random_point(rng);
    Point x2 = space.random_point(rng), y2 = space.random_point(rng);
    Param t = sample_param(space, rng);
    double lhs = space.dist(geo(space, x, y, t), geo(space, x2, y2, t));
    double rhs = (1.0 - t.d) * space.dist(x, x2) + t.d * space.dist(y, y2);
    sink.keep(std::max(0.0, lhs - rhs), [&] {
      return json{{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"x'", point_to_json(x2)},
                  {"y'", point_to_json(y2)}, {"t", param_json(space, t)}, {"lhs", lhs}, {"rhs", rhs}};
    });
  });
}

PropertyReport check_midpoint(const Space& space, const CheckOptions& opt) {
  return run_sampled("midpoint", opt, [&](Rng& rng, Sink& sink) {
    Point x = space.random_point(rng), y = space.random_point(rng);
    Point x2 = space.random_point(rng), y2 = space.random_point(rng);
    double lhs = space.dist(space.midpoint(x, y), space.midpoint(x2, y2));
    double rhs = 0.5 * (space.dist(x, x2) + space.dist(y, y2));
    sink.keep(std::max(0.0, lhs - rhs), [&] {
      return json{{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"x'", point_to_json(x2)},
                  {"y'", point_to_json(y2)}, {"lhs", lhs}, {"rhs", rhs}};
    });
  });
}

PropertyReport check_busemann(const Space& space, const CheckOptions& opt) {
  return run_sampled("busemann", opt, [&](Rng& rng, Sink& sink) {
    Point x = space.random_point(rng), y = space.random_point(rng);
    Point x2 = space.random_point(rng), y2 = space.random_point(rng);
    std::array<Param, 3> t = {sample_param(space, rng), sample_param(space, rng), sample_param(space, rng)};
    std::sort(t.begin(), t.end(), [](const Param& a, const Param& b) { return a.d < b.d; });
    if (t[2].d - t[0].d <= 0.0) return;
    auto f = [&](const Param& s) { return space.dist(geo(space, x, y, s), geo(space, x2, y2, s)); };
    double f0 = f(t[0]), f1 = f(t[1]), f2 = f(t[2]);
    double chord = ((t[2].d - t[1].d) * f0 + (t[1].d - t[0].d) * f2) / (t[2].d - t[0].d);
    sink.keep(std::max(0.0, f1 - chord), [&] {
      return json{{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"x'", point_to_json(x2)},
                  {"y'", point_to_json(y2)},
                  {"t", {param_json(space, t[0]), param_json(space, t[1]), param_json(space, t[2])}},
                  {"f", {f0, f1, f2}}};
    });
  });
}

PropertyReport check_geodesic(const Space& space, const CheckOptions& opt) {
  return run_sampled("geodesic", opt, [&](Rng& rng, Sink& sink) {
    Point x = space.random_point(rng), y = space.random_point(rng);
    Param s = sample_param(space, rng), t = sample_param(space, rng);
    double lhs = space.dist(geo(space, x, y, s), geo(space, x, y, t));
    double rhs = std::fabs(s.d - t.d) * space.dist(x, y);
    double ends = std::max(space.dist(geo(space, x, y, Param{0, 0.0}), x),
                           space.dist(geo(space, x, y, Param{1, 1.0}), y));
    sink.keep(std::max(std::fabs(lhs - rhs), ends), [&] {
      return json{{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"s", param_json(space, s)},
                  {"t", param_json(space, t)}, {"lhs", lhs}, {"rhs", rhs}};
    });
  });
}

PropertyReport check_metric(const Space& space, const CheckOptions& opt) {
  return run_sampled("metric", opt, [&](Rng& rng, Sink& sink) {
    Point x = space.random_point(rng), y = space.random_point(rng), z = space.random_point(rng);
    double dxy = space.dist(x, y), dyx = space.dist(y, x);
    double v = std::max({std::fabs(dxy - dyx), space.dist(x, x), dxy - (space.dist(x, z) + space.dist(z, y))});
    if (dxy < 0) v = std::max(v, -dxy);
    sink.keep(std::max(0.0, v), [&] {
      return json{{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"z", point_to_json(z)}};
    });
  });
}

PropertyReport check_isometry(const Space& space, const Isometry& iso, const CheckOptions& opt) {
  validate_isometry(space, iso);
  auto r = run_sampled("isometry " + iso.describe(), opt, [&](Rng& rng, Sink& sink) {
    Point x = space.random_point(rng), y = space.random_point(rng);
    Param t = sample_param(space, rng);
    Point fx = apply_isometry(space, iso, x), fy = apply_isometry(space, iso, y);
    double dist_err = std::fabs(space.dist(fx, fy) - space.dist(x, y));
    double equiv_err = space.dist(apply_isometry(space, iso, geo(space, x, y, t)), geo(space, fx, fy, t));
    sink.keep(std::max(dist_err, equiv_err), [&] {
      return json{{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"t", param_json(space, t)},
                  {"distance_error", dist_err}, {"equivariance_error", equiv_err}};
    });
  });
  return r;
}

PropertyReport check_isometries(const Space& space, const CheckOptions& opt) {
  PropertyReport out;
  out.name = "isometries";
  out.seed = opt.seed;
  out.tolerance = opt.tolerance;
  for (const auto& [name, iso] : space.isometries()) {
    PropertyReport r = check_isometry(space, iso, opt);
    out.samples += r.samples;
    out.details[name] = r.margin;
    if (r.margin > out.margin) {
      out.margin = r.margin;
      if (r.witness) out.witness = json{{"isometry", name}, {"sample", *r.witness}};
    }
  }
  out.pass = out.margin <= opt.tolerance;
  if (out.pass) out.witness.reset();
  return out;
}

namespace {

Point hull_draw(const Space& space, const std::vector<Point>& support, int depth, Rng& rng) {
  if (depth == 0) {
    std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
    return support[pick(rng)];
  }
  Point x = hull_draw(space, support, depth - 1, rng);
  Point y = hull_draw(space, support, depth - 1, rng);
  return geo(space, x, y, sample_param(space, rng));
}

}  // namespace

std::vector<Point> convex_hull_sample(const Space& space, const std::vector<Point>& support, int depth,
                                      std::int64_t count, std::uint64_t seed) {
  if (support.empty()) throw InvalidArgument("hull of an empty set");
  if (depth < 1 || depth > 20) throw InvalidArgument("hull depth must be in [1, 20]");
  if (count < 1) throw InvalidArgument("sample count must be positive");
  for (const auto& p : support) space.validate(p);
  Rng rng(seed);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back(hull_draw(space, support, depth, rng));
  return out;
}

PropertyReport strict_convexity_check(std::int64_t samples, std::uint64_t seed, std::int64_t lo, std::int64_t hi) {
  Space space = Space::star_seq(lo, hi);
  CheckOptions opt{samples, seed, 0.0};
  double min_gap = 1.0;
  auto to_dense = [](const SparseSeq& s, double scale, std::map<std::int64_t, double>& out, double w) {
    for (const auto& [i, v] : s.entries()) out[i] += w * to_double(v) / scale;
  };
  PropertyReport r = run_sampled("strict-convexity", opt, [&](Rng& rng, Sink& sink) {
    SparseSeq x, y;
    for (;;) {
      x = std::get<SparseSeq>(space.random_point(rng));
      y = std::get<SparseSeq>(space.random_point(rng));
      if (x.is_zero() || y.is_zero()) continue;
      // reject y = c x with c > 0: same unit vector
      Rational c = y.entries()[0].second / x.entries()[0].second;
      if (c > 0 && y == c * x) continue;
      break;
    }
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double lambda = 0.0;
    while (lambda == 0.0) lambda = u(rng);
    std::map<std::int64_t, double> z;
    to_dense(x, star_norm(x), z, 1.0 - lambda);
    to_dense(y, star_norm(y), z, lambda);
    double l1 = 0, l2 = 0;
    for (const auto& [i, v] : z) {
      l1 += std::fabs(v);
      l2 += v * v;
    }
    double gap = 1.0 - std::sqrt(l1 * l1 + l2);
    min_gap = std::min(min_gap, gap);
    sink.keep(gap > 0.0 ? 0.0 : std::max(-gap, std::numeric_limits<double>::min()), [&] {
      return json{{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"lambda", lambda}, {"gap", gap}};
    });
  });
  r.details["min_gap"] = min_gap;
  return r;
}

std::vector<std::string> check_names() { return {"conical", "midpoint", "busemann", "geodesic", "metric", "isometries"}; }

PropertyReport run_check(const Space& space, const std::string& name, const CheckOptions& opt) {
  if (name == "conical") return check_conical(space, opt);
  if (name == "midpoint") return check_midpoint(space, opt);
  if (name == "busemann") return check_busemann(space, opt);
  if (name == "geodesic") return check_geodesic(space, opt);
  if (name == "metric") return check_metric(space, opt);
  if (name == "isometries") return check_isometries(space, opt);
  if (name == "strict-convexity") {
    if (space.kind() != SpaceKind::star_seq) throw KindMismatch("strict-convexity applies to star-seq only");
    return strict_convexity_check(opt.samples, opt.seed, space.window_lo(), space.window_hi());
  }
  throw InvalidArgument("unknown check '" + name + "'");
}

json to_json(const PropertyReport& r) {
  json j = {{"name", r.name},     {"samples", r.samples}, {"margin", r.margin}, {"tolerance", r.tolerance},
            {"seed", r.seed},     {"pass", r.pass},       {"details", r.details}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

}  // namespace bicomb
