#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bicomb/space.hpp"

namespace bicomb {

inline constexpr double kDefaultCheckTolerance = 1e-9;

// Outcome of a sampled property check. margin is the largest observed
// violation, clipped at 0; the check passes when margin <= tolerance.
struct PropertyReport {
  std::string name;
  std::int64_t samples = 0;
  double margin = 0.0;
  double tolerance = kDefaultCheckTolerance;
  std::uint64_t seed = 0;
  bool pass = true;
  // Extra figures a check wants to publish (e.g. smallest observed gap).
  nlohmann::json details = nlohmann::json::object();
  // Inputs of the worst violating sample, present only on failure.
  std::optional<nlohmann::json> witness;
};

struct CheckOptions {
  std::int64_t samples = 10000;
  std::uint64_t seed = 0;
  double tolerance = kDefaultCheckTolerance;
};

// d(s_xy(t), s_x'y'(t)) <= (1-t) d(x,x') + t d(y,y')
PropertyReport check_conical(const Space& space, const CheckOptions& opt);
// d(m(x,y), m(x',y')) <= (d(x,x') + d(y,y')) / 2
PropertyReport check_midpoint(const Space& space, const CheckOptions& opt);
// t -> d(s_xy(t), s_x'y'(t)) convex on [0, 1]
PropertyReport check_busemann(const Space& space, const CheckOptions& opt);
// d(s_xy(s), s_xy(t)) = |s - t| d(x, y)
PropertyReport check_geodesic(const Space& space, const CheckOptions& opt);
// Symmetry, identity and triangle inequality.
PropertyReport check_metric(const Space& space, const CheckOptions& opt);
// Each registered isometry preserves distance and commutes with the bicombing.
PropertyReport check_isometries(const Space& space, const CheckOptions& opt);
PropertyReport check_isometry(const Space& space, const Isometry& iso, const CheckOptions& opt);

// `count` random points of A_depth, where A_0 = support and
// A_{k+1} = {s_xy(t) : x, y in A_k}. Each point is one random path of the recursion.
std::vector<Point> convex_hull_sample(const Space& space, const std::vector<Point>& support, int depth,
                                      std::int64_t count, std::uint64_t seed);

// Distinct unit vectors x, y of the star norm and lambda in (0, 1):
// the norm of (1 - lambda) x + lambda y stays below 1. Reports the smallest gap.
PropertyReport strict_convexity_check(std::int64_t samples, std::uint64_t seed,
                                      std::int64_t lo = -8, std::int64_t hi = 8);

PropertyReport run_check(const Space& space, const std::string& name, const CheckOptions& opt);
std::vector<std::string> check_names();

nlohmann::json to_json(const PropertyReport& report);

}  // namespace bicomb
