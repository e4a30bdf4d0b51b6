#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bicomb/sparse_seq.hpp"

namespace bicomb {

enum class SpaceKind { euclidean, star_seq, tree };

std::string to_string(SpaceKind kind);

struct EuclidPoint {
  std::vector<double> coords;
  friend bool operator==(const EuclidPoint&, const EuclidPoint&) = default;
};

// Point on leg `leg` at distance `r` from the center.
// The center is stored as leg 0, r = 0.
struct TreePoint {
  int leg = 0;
  double r = 0.0;
  bool is_center() const { return r == 0.0; }
  friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

using Point = std::variant<EuclidPoint, SparseSeq, TreePoint>;

SpaceKind kind_of(const Point& p);
std::string describe(const Point& p);

}  // namespace bicomb
