#include "bicomb/space.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "bicomb/errors.hpp"

namespace bicomb {

Space Space::euclidean(int dim) {
  if (dim < 1) throw InvalidArgument("euclidean dimension must be positive");
  Space s;
  s.kind_ = SpaceKind::euclidean;
  s.dim_ = dim;
  s.register_defaults();
  return s;
}

Space Space::star_seq(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("empty star-seq window");
  Space s;
  s.kind_ = SpaceKind::star_seq;
  s.lo_ = lo;
  s.hi_ = hi;
  s.register_defaults();
  return s;
}

Space Space::tree(std::vector<double> lengths) {
  if (lengths.empty()) throw InvalidArgument("tree needs at least one leg");
  for (double l : lengths)
    if (!(l > 0) || !std::isfinite(l)) throw InvalidArgument("leg lengths must be positive and finite");
  Space s;
  s.kind_ = SpaceKind::tree;
  s.lengths_ = std::move(lengths);
  s.register_defaults();
  return s;
}

void Space::register_defaults() {
  registry_["identity"] = Isometry::identity();
  switch (kind_) {
    case SpaceKind::euclidean: {
      std::vector<double> e(dim_, 0.0);
      e[0] = 1.0;
      registry_["translate-e1"] = Isometry::translation(e);
      if (dim_ == 2) {
        registry_["rotate-1/3"] = Isometry::rotation_turns(Rational(1, 3));
        registry_["rotate-1/4"] = Isometry::rotation_turns(Rational(1, 4));
        registry_["rotate-1/5"] = Isometry::rotation_turns(Rational(1, 5));
      }
      break;
    }
    case SpaceKind::star_seq:
      registry_["shift"] = Isometry::shift(1);
      break;
    case SpaceKind::tree: {
      const int k = legs();
      bool all_equal = std::all_of(lengths_.begin(), lengths_.end(), [&](double l) { return l == lengths_[0]; });
      if (all_equal && k > 1) {
        std::vector<int> cyc(k);
        for (int i = 0; i < k; ++i) cyc[i] = (i + 1) % k;
        registry_["cycle-legs"] = Isometry::leg_permutation(cyc);
      }
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (lengths_[i] == lengths_[j]) {
            std::vector<int> p(k);
            for (int a = 0; a < k; ++a) p[a] = a;
            std::swap(p[i], p[j]);
            registry_["swap-" + std::to_string(i) + "-" + std::to_string(j)] = Isometry::leg_permutation(p);
          }
      break;
    }
  }
}

void Space::register_isometry(const std::string& name, Isometry iso) {
  validate_isometry(*this, iso);
  registry_[name] = std::move(iso);
}

const Isometry& Space::isometry(const std::string& name) const {
  auto it = registry_.find(name);
  if (it == registry_.end()) throw InvalidArgument("unknown isometry '" + name + "'");
  return it->second;
}

void Space::validate(const Point& x) const {
  if (kind_of(x) != kind_)
    throw KindMismatch("point of kind " + to_string(kind_of(x)) + " used in a " + to_string(kind_) + " space");
  if (auto e = std::get_if<EuclidPoint>(&x)) {
    if (static_cast<int>(e->coords.size()) != dim_) throw InvalidArgument("point has wrong dimension");
    for (double c : e->coords)
      if (!std::isfinite(c)) throw InvalidArgument("non-finite coordinate");
  } else if (auto t = std::get_if<TreePoint>(&x)) {
    if (t->leg < 0 || t->leg >= legs()) throw InvalidArgument("leg index out of range");
    if (!(t->r >= 0.0) || t->r > lengths_[t->leg] + kMergeTolerance)
      throw InvalidArgument("tree radius outside its leg");
  }
}

bool Space::contains(const Point& x) const {
  try {
    validate(x);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Point Space::canonical(const Point& x) const {
  validate(x);
  if (auto t = std::get_if<TreePoint>(&x)) {
    if (t->r == 0.0) return TreePoint{};
    return TreePoint{t->leg, std::min(t->r, lengths_[t->leg])};
  }
  return x;
}

double Space::dist(const Point& x, const Point& y) const {
  validate(x);
  validate(y);
  switch (kind_) {
    case SpaceKind::euclidean: {
      const auto& a = std::get<EuclidPoint>(x).coords;
      const auto& b = std::get<EuclidPoint>(y).coords;
      double s = 0;
      for (int i = 0; i < dim_; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
      return std::sqrt(s);
    }
    case SpaceKind::star_seq:
      return star_dist(std::get<SparseSeq>(x), std::get<SparseSeq>(y));
    case SpaceKind::tree: {
      const auto& a = std::get<TreePoint>(x);
      const auto& b = std::get<TreePoint>(y);
      if (a.leg == b.leg || a.is_center() || b.is_center()) {
        if (a.leg == b.leg) return std::fabs(a.r - b.r);
        return a.r + b.r;
      }
      return a.r + b.r;
    }
  }
  return 0;
}

Point Space::geodesic(const Point& x, const Point& y, const Rational& t) const {
  if (kind_ == SpaceKind::star_seq) {
    validate(x);
    validate(y);
    if (t < 0 || t > 1) throw InvalidArgument("geodesic parameter outside [0, 1]");
    return SparseSeq::affine(std::get<SparseSeq>(x), std::get<SparseSeq>(y), t);
  }
  return geodesic(x, y, to_double(t));
}

Point Space::geodesic(const Point& x, const Point& y, double t) const {
  validate(x);
  validate(y);
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("geodesic parameter outside [0, 1]");
  switch (kind_) {
    case SpaceKind::euclidean: {
      const auto& a = std::get<EuclidPoint>(x).coords;
      const auto& b = std::get<EuclidPoint>(y).coords;
      EuclidPoint p;
      p.coords.resize(dim_);
      for (int i = 0; i < dim_; ++i) p.coords[i] = (1.0 - t) * a[i] + t * b[i];
      return p;
    }
    case SpaceKind::star_seq:
      return geodesic(x, y, exact_rational(t));
    case SpaceKind::tree: {
      TreePoint a = std::get<TreePoint>(canonical(x));
      TreePoint b = std::get<TreePoint>(canonical(y));
      if (t == 0.0) return a;
      if (t == 1.0) return b;
      // walk from the smaller endpoint so sigma_xy(t) and sigma_yx(1 - t) agree
      if (std::tie(b.leg, b.r) < std::tie(a.leg, a.r)) {
        std::swap(a, b);
        t = 1.0 - t;
      }
      if (a.leg == b.leg || a.is_center() || b.is_center()) {
        int leg = a.is_center() ? b.leg : a.leg;
        double r = a.r + t * (b.r - a.r);
        return r == 0.0 ? TreePoint{} : TreePoint{leg, r};
      }
      double s = t * (a.r + b.r);
      if (s < a.r) return TreePoint{a.leg, a.r - s};
      if (s == a.r) return TreePoint{};
      return TreePoint{b.leg, s - a.r};
    }
  }
  return x;
}

Point Space::midpoint(const Point& x, const Point& y) const {
  if (kind_ == SpaceKind::star_seq) return geodesic(x, y, Rational(1, 2));
  return geodesic(x, y, 0.5);
}

bool Space::same_point(const Point& x, const Point& y) const {
  if (kind_ == SpaceKind::star_seq) {
    validate(x);
    validate(y);
    return std::get<SparseSeq>(x) == std::get<SparseSeq>(y);
  }
  return dist(x, y) <= kMergeTolerance;
}

Point Space::origin() const {
  switch (kind_) {
    case SpaceKind::euclidean: return EuclidPoint{std::vector<double>(dim_, 0.0)};
    case SpaceKind::star_seq: return SparseSeq{};
    case SpaceKind::tree: return TreePoint{};
  }
  return TreePoint{};
}

Point Space::random_point(Rng& rng) const {
  switch (kind_) {
    case SpaceKind::euclidean: {
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      EuclidPoint p;
      p.coords.resize(dim_);
      for (double& c : p.coords) c = u(rng);
      return p;
    }
    case SpaceKind::star_seq: {
      std::uniform_int_distribution<std::int64_t> idx(lo_, hi_);
      std::uniform_int_distribution<int> count(0, 4), num(-8, 8), den(1, 8);
      int n = count(rng);
      std::vector<SparseSeq::Entry> e;
      for (int i = 0; i < n; ++i) {
        std::int64_t k = idx(rng);
        if (std::any_of(e.begin(), e.end(), [&](const auto& q) { return q.first == k; })) continue;
        e.emplace_back(k, ratio(num(rng), den(rng)));
      }
      return SparseSeq::from_entries(std::move(e));
    }
    case SpaceKind::tree: {
      std::uniform_int_distribution<int> leg(0, legs() - 1);
      std::uniform_int_distribution<int> kind(0, 9);
      int l = leg(rng);
      int k = kind(rng);
      if (k == 0) return TreePoint{};
      if (k == 1) return TreePoint{l, lengths_[l]};
      std::uniform_real_distribution<double> u(0.0, lengths_[l]);
      double r = u(rng);
      return r == 0.0 ? TreePoint{} : TreePoint{l, r};
    }
  }
  return origin();
}

std::string Space::describe() const {
  switch (kind_) {
    case SpaceKind::euclidean: return "euclidean(" + std::to_string(dim_) + ")";
    case SpaceKind::star_seq: return "star-seq[" + std::to_string(lo_) + ", " + std::to_string(hi_) + "]";
    case SpaceKind::tree: {
      std::string s = "tree(";
      for (int i = 0; i < legs(); ++i) s += (i ? ", " : "") + std::to_string(lengths_[i]);
      return s + ")";
    }
  }
  return "?";
}

}  // namespace bicomb
