#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bicomb/isometry.hpp"
#include "bicomb/point.hpp"
#include "bicomb/rational.hpp"

namespace bicomb {

using Rng = std::mt19937_64;

// Points of floating kinds closer than this are treated as one point.
inline constexpr double kMergeTolerance = 1e-12;

// A geodesic metric space with a conical geodesic bicombing.
//   euclidean  R^d with straight segments
//   star-seq   finitely supported rational sequences, norm sqrt(|x|_1^2 + |x|_2^2)
//   tree       k legs glued at a center
class Space {
 public:
  static Space euclidean(int dim);
  // The window only bounds indices used for random sampling.
  static Space star_seq(std::int64_t lo = -8, std::int64_t hi = 8);
  static Space tree(std::vector<double> lengths);

  SpaceKind kind() const { return kind_; }
  int dim() const { return dim_; }
  std::int64_t window_lo() const { return lo_; }
  std::int64_t window_hi() const { return hi_; }
  int legs() const { return static_cast<int>(lengths_.size()); }
  double leg_length(int leg) const { return lengths_.at(leg); }
  const std::vector<double>& leg_lengths() const { return lengths_; }

  // Throws KindMismatch or InvalidArgument.
  void validate(const Point& x) const;
  bool contains(const Point& x) const;
  Point canonical(const Point& x) const;

  double dist(const Point& x, const Point& y) const;
  // sigma_xy(t). Exact on star-seq.
  Point geodesic(const Point& x, const Point& y, const Rational& t) const;
  Point geodesic(const Point& x, const Point& y, double t) const;
  Point midpoint(const Point& x, const Point& y) const;

  // Exact equality on star-seq, distance <= kMergeTolerance otherwise.
  bool same_point(const Point& x, const Point& y) const;
  Point origin() const;

  Point random_point(Rng& rng) const;

  // Named isometries available to the command line tool.
  const std::map<std::string, Isometry>& isometries() const { return registry_; }
  void register_isometry(const std::string& name, Isometry iso);
  const Isometry& isometry(const std::string& name) const;

  std::string describe() const;

 private:
  Space() = default;
  void register_defaults();

  SpaceKind kind_ = SpaceKind::euclidean;
  int dim_ = 0;
  std::int64_t lo_ = 0, hi_ = 0;
  std::vector<double> lengths_;
  std::map<std::string, Isometry> registry_;
};

}  // namespace bicomb
