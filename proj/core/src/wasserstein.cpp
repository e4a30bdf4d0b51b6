#include "bicomb/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bicomb/errors.hpp"

namespace bicomb {

std::vector<double> distance_matrix(const Space& space, const std::vector<Point>& xs, const std::vector<Point>& ys) {
  std::vector<double> d;
  d.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) d.push_back(space.dist(x, y));
  return d;
}

Assignment w1_uniform_matching(const Space& space, const std::vector<Point>& xs, const std::vector<Point>& ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("tuples have different lengths");
  if (xs.empty()) throw InvalidArgument("empty tuples");
  return solve_assignment(distance_matrix(space, xs, ys), static_cast<int>(xs.size()));
}

double w1_uniform(const Space& space, const std::vector<Point>& xs, const std::vector<Point>& ys) {
  Assignment m = w1_uniform_matching(space, xs, ys);
  return to_double(m.exact_cost / static_cast<long>(xs.size()));
}

namespace {

void check_same_space(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  if (mu.space().kind() != nu.space().kind()) throw KindMismatch("measures live on different space kinds");
}

std::vector<Point> support(const AtomicMeasure& mu) {
  std::vector<Point> s;
  for (const auto& a : mu.atoms()) s.push_back(a.point);
  return s;
}

std::vector<Rational> masses(const AtomicMeasure& mu) {
  std::vector<Rational> w;
  for (const auto& a : mu.atoms()) w.push_back(a.mass);
  return w;
}

}  // namespace

// Mass shared by an atom of mu and an atom of nu at the same point stays in
// place; only the remainder goes through the flow solver.
TransportPlan w1_atomic_plan(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  check_same_space(mu, nu);
  const Space& space = mu.space();
  std::vector<Rational> supply = masses(mu), demand = masses(nu);
  const std::size_t m = supply.size(), n = demand.size();
  std::vector<std::vector<Rational>> kept(m, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (demand[j] > 0 && space.same_point(mu.atoms()[i].point, nu.atoms()[j].point)) {
        kept[i][j] = std::min(supply[i], demand[j]);
        supply[i] -= kept[i][j];
        demand[j] -= kept[i][j];
        break;
      }
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m; ++i)
    if (supply[i] > 0) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j)
    if (demand[j] > 0) cols.push_back(j);
  TransportPlan plan;
  plan.flow = std::move(kept);
  if (rows.empty()) return plan;
  std::vector<Rational> s, d;
  std::vector<double> cost;
  for (auto i : rows) s.push_back(supply[i]);
  for (auto j : cols) d.push_back(demand[j]);
  for (auto i : rows)
    for (auto j : cols) cost.push_back(space.dist(mu.atoms()[i].point, nu.atoms()[j].point));
  TransportPlan rest = solve_transport(s, d, cost);
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) plan.flow[rows[a]][cols[b]] += rest.flow[a][b];
  plan.cost = rest.cost;
  return plan;
}

double w1_atomic(const AtomicMeasure& mu, const AtomicMeasure& nu) { return w1_atomic_plan(mu, nu).cost; }

double w1_expanded(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  check_same_space(mu, nu);
  mpz_class n;
  mpz_lcm(n.get_mpz_t(), mu.lcd().get_mpz_t(), nu.lcd().get_mpz_t());
  if (n > kMaxExpansion) throw InvalidArgument("common denominator " + n.get_str() + " exceeds the expansion cap");
  return w1_uniform(mu.space(), mu.uniform_tuple(n), nu.uniform_tuple(n));
}

AtomicMeasure pushforward(const Isometry& phi, const AtomicMeasure& mu) {
  validate_isometry(mu.space(), phi);
  std::vector<AtomicMeasure::Atom> atoms;
  atoms.reserve(mu.size());
  for (const auto& a : mu.atoms()) atoms.push_back({apply_isometry(mu.space(), phi, a.point), a.mass});
  return AtomicMeasure(mu.space(), std::move(atoms));
}

AtomicMeasure quantize(const Space& space, const std::vector<Point>& points, const std::vector<double>& weights,
                       std::int64_t q) {
  if (points.size() != weights.size()) throw InvalidArgument("points and weights differ in length");
  if (q < 1) throw InvalidArgument("quantization level must be positive");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidArgument("weights must be finite and non-negative");
    total += w;
  }
  if (!(total > 0.0)) throw InvalidArgument("weights sum to zero");
  const std::size_t n = points.size();
  std::vector<std::int64_t> units(n);
  std::vector<double> rem(n);
  std::int64_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = weights[i] / total * static_cast<double>(q);
    units[i] = static_cast<std::int64_t>(std::floor(s));
    rem[i] = s - static_cast<double>(units[i]);
    used += units[i];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
  for (std::size_t k = 0; used < q && k < n; ++k) {
    if (weights[order[k]] == 0.0) continue;
    ++units[order[k]];
    ++used;
  }
  for (std::size_t k = 0; used > q && k < n; ++k)
    if (units[order[n - 1 - k]] > 0) {
      --units[order[n - 1 - k]];
      --used;
    }
  std::vector<AtomicMeasure::Atom> atoms;
  for (std::size_t i = 0; i < n; ++i)
    if (units[i] > 0) atoms.push_back({points[i], ratio(units[i], q)});
  return AtomicMeasure(space, std::move(atoms));
}

}  // namespace bicomb
