#include "bicomb/measure.hpp"

#include "bicomb/errors.hpp"

namespace bicomb {

AtomicMeasure::AtomicMeasure(const Space& space, std::vector<Atom> atoms) : space_(space) {
  if (atoms.empty()) throw InvalidArgument("measure has no atoms");
  Rational total = 0;
  for (auto& a : atoms) {
    a.mass.canonicalize();
    if (a.mass <= 0) throw InvalidArgument("atom mass must be positive");
    Point p = space_.canonical(a.point);
    total += a.mass;
    bool merged = false;
    for (auto& b : atoms_)
      if (space_.same_point(b.point, p)) {
        b.mass += a.mass;
        merged = true;
        break;
      }
    if (!merged) atoms_.push_back({std::move(p), a.mass});
  }
  if (total != 1) throw InvalidArgument("masses sum to " + to_string(total) + ", not 1");
}

AtomicMeasure AtomicMeasure::dirac(const Space& space, const Point& x) {
  return AtomicMeasure(space, {{x, Rational(1)}});
}

AtomicMeasure AtomicMeasure::uniform(const Space& space, const std::vector<Point>& points) {
  if (points.empty()) throw InvalidArgument("uniform measure on no points");
  std::vector<Atom> atoms;
  atoms.reserve(points.size());
  Rational w(1, static_cast<long>(points.size()));
  for (const auto& p : points) atoms.push_back({p, w});
  return AtomicMeasure(space, std::move(atoms));
}

mpz_class AtomicMeasure::lcd() const {
  mpz_class l = 1;
  for (const auto& a : atoms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.mass.get_den_mpz_t());
  return l;
}

std::vector<Point> AtomicMeasure::uniform_tuple() const { return uniform_tuple(lcd()); }

std::vector<Point> AtomicMeasure::uniform_tuple(const mpz_class& n) const {
  std::vector<Point> out;
  for (const auto& a : atoms_) {
    Rational c = a.mass * Rational(n);
    c.canonicalize();
    if (c.get_den() != 1) throw InvalidArgument("masses are not multiples of 1/" + n.get_str());
    if (!c.get_num().fits_slong_p()) throw InvalidArgument("tuple too large");
    for (long i = 0; i < c.get_num().get_si(); ++i) out.push_back(a.point);
  }
  return out;
}

}  // namespace bicomb
