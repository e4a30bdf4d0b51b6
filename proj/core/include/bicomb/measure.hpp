#pragma once

#include <vector>

#include "bicomb/point.hpp"
#include "bicomb/rational.hpp"
#include "bicomb/space.hpp"

namespace bicomb {

// Finitely supported probability measure with positive rational masses.
// Support points are pairwise distinct: colliding atoms are merged on
// construction (exact on star-seq, within kMergeTolerance otherwise).
class AtomicMeasure {
 public:
  struct Atom {
    Point point;
    Rational mass;
  };

  // Throws InvalidArgument unless masses are positive and sum to 1.
  AtomicMeasure(const Space& space, std::vector<Atom> atoms);
  static AtomicMeasure dirac(const Space& space, const Point& x);
  static AtomicMeasure uniform(const Space& space, const std::vector<Point>& points);

  const Space& space() const { return space_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  // Least common denominator of the masses.
  mpz_class lcd() const;
  // The lcd-uniform tuple: atom i repeated mass_i * lcd times, in atom order.
  std::vector<Point> uniform_tuple() const;
  std::vector<Point> uniform_tuple(const mpz_class& n) const;

 private:
  Space space_;
  std::vector<Atom> atoms_;
};

}  // namespace bicomb
