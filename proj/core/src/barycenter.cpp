#include "bicomb/barycenter.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bary_engine.hpp"
#include "bicomb/errors.hpp"

namespace bicomb {

namespace {

bool point_less(const Point& a, const Point& b) {
  if (auto x = std::get_if<EuclidPoint>(&a)) return x->coords < std::get<EuclidPoint>(b).coords;
  if (auto x = std::get_if<TreePoint>(&a)) {
    const auto& y = std::get<TreePoint>(b);
    return std::pair(x->leg, x->r) < std::pair(y.leg, y.r);
  }
  const auto& x = std::get<SparseSeq>(a).entries();
  const auto& y = std::get<SparseSeq>(b).entries();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return p.first < q.first;
    return p.second < q.second;
  });
}

// Flat coordinates of a point set in one chart.
struct Flat {
  SpaceKind kind;
  int dim = 0;
  std::vector<SparseSeq::Index> index;  // star-seq coordinates
  std::vector<double> coords;
};

Flat flatten(const Space& space, const std::vector<Point>& pts) {
  Flat f;
  f.kind = space.kind();
  switch (space.kind()) {
    case SpaceKind::euclidean:
      f.dim = space.dim();
      for (const auto& p : pts) {
        const auto& c = std::get<EuclidPoint>(p).coords;
        f.coords.insert(f.coords.end(), c.begin(), c.end());
      }
      break;
    case SpaceKind::star_seq: {
      for (const auto& p : pts)
        for (const auto& [i, v] : std::get<SparseSeq>(p).entries()) f.index.push_back(i);
      std::sort(f.index.begin(), f.index.end());
      f.index.erase(std::unique(f.index.begin(), f.index.end()), f.index.end());
      f.dim = std::max<int>(1, static_cast<int>(f.index.size()));
      if (f.index.empty()) f.index.push_back(0);
      for (const auto& p : pts) {
        std::vector<double> row(f.dim, 0.0);
        for (const auto& [i, v] : std::get<SparseSeq>(p).entries()) {
          auto k = std::lower_bound(f.index.begin(), f.index.end(), i) - f.index.begin();
          row[k] = to_double(v);
        }
        f.coords.insert(f.coords.end(), row.begin(), row.end());
      }
      break;
    }
    case SpaceKind::tree:
      f.dim = 2;
      for (const auto& p : pts) {
        const auto& t = std::get<TreePoint>(p);
        f.coords.push_back(t.is_center() ? 0.0 : static_cast<double>(t.leg));
        f.coords.push_back(t.r);
      }
      break;
  }
  return f;
}

Point unflatten(const Space& space, const Flat& f, const std::vector<double>& c) {
  switch (space.kind()) {
    case SpaceKind::euclidean: return EuclidPoint{c};
    case SpaceKind::star_seq: {
      std::vector<SparseSeq::Entry> e;
      for (int k = 0; k < f.dim; ++k)
        if (c[k] != 0.0) e.emplace_back(f.index[k], exact_rational(c[k]));
      return SparseSeq::from_entries(std::move(e));
    }
    case SpaceKind::tree:
      if (c[1] == 0.0) return TreePoint{};
      return space.canonical(TreePoint{static_cast<int>(c[0]), c[1]});
  }
  return space.origin();
}

std::vector<double> run_engine(const Space& space, const Flat& f, const std::vector<int>& counts,
                               const BaryConfig& cfg, BaryStats& stats) {
  switch (space.kind()) {
    case SpaceKind::euclidean: {
      detail::Engine<detail::EuclidChart> e(detail::EuclidChart{f.dim}, cfg, stats);
      return e.evaluate(f.coords, counts);
    }
    case SpaceKind::star_seq: {
      detail::Engine<detail::StarChart> e(detail::StarChart{f.dim}, cfg, stats);
      return e.evaluate(f.coords, counts);
    }
    case SpaceKind::tree: {
      detail::Engine<detail::TreeChart> e(detail::TreeChart{}, cfg, stats);
      return e.evaluate(f.coords, counts);
    }
  }
  return {};
}

void check_size(int n, const BaryConfig& cfg) {
  if (n > cfg.max_tuple_size)
    throw InvalidArgument("tuple of size " + std::to_string(n) + " exceeds max_tuple_size " +
                          std::to_string(cfg.max_tuple_size));
}

BetaResult beta_groups(const Space& space, const MultisetKey& key, const BaryConfig& cfg) {
  BetaResult out;
  const int n = key.size();
  if (key.points.size() == 1) {
    out.point = key.points[0];
    out.tuple_size = n;
    return out;
  }
  check_size(n, cfg);
  Flat f = flatten(space, key.points);
  std::vector<double> prev;
  for (int k = 1;; k *= 2) {
    std::vector<int> counts = key.counts;
    for (int& c : counts) c *= k;
    std::vector<double> x = run_engine(space, f, counts, cfg, out.stats);
    out.k_used = k;
    out.tuple_size = n * k;
    out.point = unflatten(space, f, x);
    if (k > 1) {
      out.residual = space.dist(out.point, unflatten(space, f, prev));
      if (out.residual < cfg.limit_tol) return out;
    }
    if (2 * k > cfg.max_k || 2 * n * k > cfg.max_tuple_size)
      throw ConvergenceError("barycenter limit not reached by k = " + std::to_string(k), out.residual);
    prev = std::move(x);
  }
}

}  // namespace

int MultisetKey::size() const { return std::accumulate(counts.begin(), counts.end(), 0); }

MultisetKey make_multiset_key(const Space& space, const std::vector<Point>& tuple) {
  std::vector<std::pair<Point, int>> groups;
  for (const auto& p : tuple) {
    Point q = space.canonical(p);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return space.same_point(g.first, q); });
    if (it != groups.end()) ++it->second;
    else groups.emplace_back(std::move(q), 1);
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
  MultisetKey key;
  for (auto& [p, c] : groups) {
    key.points.push_back(std::move(p));
    key.counts.push_back(c);
  }
  return key;
}

Point b_n(const Space& space, const std::vector<Point>& tuple, const BaryConfig& cfg, BaryStats* stats) {
  if (tuple.empty()) throw InvalidArgument("b_n of an empty tuple");
  MultisetKey key = make_multiset_key(space, tuple);
  if (key.points.size() == 1) return key.points[0];
  check_size(key.size(), cfg);
  BaryStats local;
  Flat f = flatten(space, key.points);
  Point out = unflatten(space, f, run_engine(space, f, key.counts, cfg, stats ? *stats : local));
  return out;
}

BetaResult beta(const AtomicMeasure& mu, const BaryConfig& cfg) {
  const mpz_class n = mu.lcd();
  if (n > cfg.max_tuple_size)
    throw InvalidArgument("mass denominator " + n.get_str() + " exceeds max_tuple_size " +
                          std::to_string(cfg.max_tuple_size));
  MultisetKey key;
  std::vector<std::pair<Point, int>> groups;
  for (const auto& a : mu.atoms()) {
    Rational c = a.mass * Rational(n);
    groups.emplace_back(a.point, static_cast<int>(c.get_num().get_si()));
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
  for (auto& [p, c] : groups) {
    key.points.push_back(std::move(p));
    key.counts.push_back(c);
  }
  return beta_groups(mu.space(), key, cfg);
}

BetaResult beta_from_tuple(const Space& space, const std::vector<Point>& tuple, const BaryConfig& cfg) {
  if (tuple.empty()) throw InvalidArgument("beta of an empty tuple");
  return beta_groups(space, make_multiset_key(space, tuple), cfg);
}

Point banach_mean(const AtomicMeasure& mu) {
  const Space& space = mu.space();
  switch (space.kind()) {
    case SpaceKind::euclidean: {
      std::vector<double> c(space.dim(), 0.0);
      for (const auto& a : mu.atoms()) {
        double w = to_double(a.mass);
        const auto& x = std::get<EuclidPoint>(a.point).coords;
        for (int i = 0; i < space.dim(); ++i) c[i] += w * x[i];
      }
      return EuclidPoint{c};
    }
    case SpaceKind::star_seq: {
      SparseSeq s;
      for (const auto& a : mu.atoms()) s += a.mass * std::get<SparseSeq>(a.point);
      return s;
    }
    case SpaceKind::tree: break;
  }
  throw KindMismatch("banach_mean needs a normed space");
}

}  // namespace bicomb
