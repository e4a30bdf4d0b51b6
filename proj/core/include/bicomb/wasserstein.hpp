#pragma once

#include <cstdint>
#include <vector>

#include "bicomb/assignment.hpp"
#include "bicomb/isometry.hpp"
#include "bicomb/measure.hpp"
#include "bicomb/space.hpp"

namespace bicomb {

inline constexpr std::int64_t kMaxExpansion = 10000;

// Pairwise distance matrix, row-major.
std::vector<double> distance_matrix(const Space& space, const std::vector<Point>& xs, const std::vector<Point>& ys);

// W1 between uniform measures on two n-tuples: (1/n) min over permutations.
double w1_uniform(const Space& space, const std::vector<Point>& xs, const std::vector<Point>& ys);
Assignment w1_uniform_matching(const Space& space, const std::vector<Point>& xs, const std::vector<Point>& ys);

// W1 between atomic measures by min-cost flow.
double w1_atomic(const AtomicMeasure& mu, const AtomicMeasure& nu);
TransportPlan w1_atomic_plan(const AtomicMeasure& mu, const AtomicMeasure& nu);

// W1 through uniform tuples over the common denominator.
// Throws InvalidArgument when the tuples would exceed kMaxExpansion points.
double w1_expanded(const AtomicMeasure& mu, const AtomicMeasure& nu);

AtomicMeasure pushforward(const Isometry& phi, const AtomicMeasure& mu);

// Rounds non-negative weights to multiples of 1/q by largest remainder.
// Zero-mass atoms are dropped, so the support only shrinks.
AtomicMeasure quantize(const Space& space, const std::vector<Point>& points, const std::vector<double>& weights,
                       std::int64_t q);

}  // namespace bicomb
