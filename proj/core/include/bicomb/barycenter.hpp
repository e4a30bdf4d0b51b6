#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bicomb/measure.hpp"
#include "bicomb/space.hpp"

namespace bicomb {

struct BaryConfig {
  // b_n iterates until the tuple diameter drops below tuple_tol.
  double tuple_tol = 1e-10;
  // beta doubles k until successive values differ by less than limit_tol.
  double limit_tol = 1e-8;
  int max_k = 4;
  // Largest tuple n * k the recursion may be asked to evaluate.
  int max_tuple_size = 16;
  int max_iterations = 200;
  // An iteration whose diameter shrinks by less than this factor has reached
  // the rounding floor. It is accepted when below stall_tol.
  double stall_ratio = 0.75;
  double stall_tol = 1e-7;
  // Upper bound on node evaluations per call.
  std::uint64_t max_work = 400'000'000;
};

struct BaryStats {
  std::uint64_t evaluations = 0;  // recursion nodes computed
  std::uint64_t memo_hits = 0;
  std::uint64_t midpoints = 0;
  std::uint64_t stalls = 0;  // iterations stopped at the rounding floor
  double worst_stall = 0.0;  // largest accepted diameter at a stall
};

// Multiset of points: distinct points with multiplicities, canonically ordered.
// Floating points within kMergeTolerance share one slot.
struct MultisetKey {
  std::vector<Point> points;
  std::vector<int> counts;
  int size() const;
};
MultisetKey make_multiset_key(const Space& space, const std::vector<Point>& tuple);

// b_n for an n-tuple (n = tuple.size()).
Point b_n(const Space& space, const std::vector<Point>& tuple, const BaryConfig& cfg = {},
          BaryStats* stats = nullptr);

struct BetaResult {
  Point point;
  int k_used = 1;
  double residual = 0.0;  // distance between the last two k-doubling values
  int tuple_size = 1;     // n * k_used
  BaryStats stats;
};

// Limit of b_{nk}(Q^k x) over the lcd-uniform representation x of mu.
BetaResult beta(const AtomicMeasure& mu, const BaryConfig& cfg = {});
// Same limit from an explicit uniform representation of a measure.
BetaResult beta_from_tuple(const Space& space, const std::vector<Point>& tuple, const BaryConfig& cfg = {});

// Weighted average on euclidean and star-seq. Exact on star-seq.
Point banach_mean(const AtomicMeasure& mu);

struct LocalityCertificate {
  double distance = 0.0;  // to the convex hull of the support
  bool pass = true;
  std::string method;
};

// Distance from `candidate` to the hull of spt(mu). Euclidean and star-seq
// solve the convex-combination problem; on trees the hull is the spanned subtree.
LocalityCertificate locality_certificate(const AtomicMeasure& mu, const Point& candidate, double tol = 1e-9);

}  // namespace bicomb
