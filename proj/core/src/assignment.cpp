#include "bicomb/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bicomb/errors.hpp"

namespace bicomb {

namespace {

// Shortest augmenting path with potentials, O(n^3), over exact rationals.
std::vector<int> hungarian(const std::vector<Rational>& cost, int n) {
  auto a = [&](int i, int j) -> const Rational& { return cost[static_cast<std::size_t>(i - 1) * n + (j - 1)]; };
  std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0)), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1), seen(n + 1);
  Rational cur, delta;
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        cur = a(i0, j) - u[i0] - v[j];
        if (!seen[j] || cur < minv[j]) {
          minv[j] = cur;
          seen[j] = 1;
          way[j] = j0;
        }
        if (j1 == 0 || minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else if (seen[j]) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> perm(n, -1);
  for (int j = 1; j <= n; ++j) perm[p[j] - 1] = j - 1;
  return perm;
}

}  // namespace

Assignment solve_assignment(const std::vector<double>& cost, int n) {
  if (n < 0 || cost.size() != static_cast<std::size_t>(n) * n) throw InvalidArgument("cost matrix is not n x n");
  for (double c : cost)
    if (!std::isfinite(c)) throw InvalidArgument("non-finite cost");
  Assignment out;
  if (n == 0) return out;
  std::vector<Rational> exact;
  exact.reserve(cost.size());
  for (double c : cost) exact.push_back(exact_rational(c));
  out.perm = hungarian(exact, n);
  for (int i = 0; i < n; ++i) out.exact_cost += exact[static_cast<std::size_t>(i) * n + out.perm[i]];
  out.cost = to_double(out.exact_cost);
  return out;
}

namespace {

struct Arc {
  int to;
  int rev;
  Rational cap;
  double cost;
};

}  // namespace

// Successive shortest paths with Bellman-Ford on the residual graph.
TransportPlan solve_transport(const std::vector<Rational>& supply, const std::vector<Rational>& demand,
                              const std::vector<double>& cost) {
  const int m = static_cast<int>(supply.size()), n = static_cast<int>(demand.size());
  if (cost.size() != static_cast<std::size_t>(m) * n) throw InvalidArgument("cost matrix has wrong shape");
  Rational total_s = 0, total_d = 0;
  for (const auto& s : supply) {
    if (s < 0) throw InvalidArgument("negative supply");
    total_s += s;
  }
  for (const auto& d : demand) {
    if (d < 0) throw InvalidArgument("negative demand");
    total_d += d;
  }
  if (total_s != total_d) throw InvalidArgument("supply and demand totals differ");
  double scale = 1.0;
  for (double c : cost) {
    if (!std::isfinite(c) || c < 0) throw InvalidArgument("costs must be finite and non-negative");
    scale = std::max(scale, c);
  }
  const double eps = 1e-14 * scale;

  const int src = m + n, snk = m + n + 1, V = m + n + 2;
  std::vector<std::vector<Arc>> g(V);
  auto add = [&](int u, int v, const Rational& cap, double c) {
    g[u].push_back({v, static_cast<int>(g[v].size()), cap, c});
    g[v].push_back({u, static_cast<int>(g[u].size()) - 1, Rational(0), -c});
  };
  for (int i = 0; i < m; ++i) add(src, i, supply[i], 0.0);
  for (int j = 0; j < n; ++j) add(m + j, snk, demand[j], 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) add(i, m + j, total_s, cost[static_cast<std::size_t>(i) * n + j]);

  Rational remaining = total_s;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(V);
  std::vector<int> prev_node(V), prev_arc(V);
  while (remaining > 0) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[src] = 0.0;
    for (int round = 0; round < V; ++round) {
      bool changed = false;
      for (int u = 0; u < V; ++u) {
        if (dist[u] == inf) continue;
        for (int k = 0; k < static_cast<int>(g[u].size()); ++k) {
          const Arc& e = g[u][k];
          if (e.cap <= 0) continue;
          double nd = dist[u] + e.cost;
          if (nd < dist[e.to] - eps) {
            dist[e.to] = nd;
            prev_node[e.to] = u;
            prev_arc[e.to] = k;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[snk] == inf) throw Error("transport: no augmenting path");
    Rational push = remaining;
    for (int v = snk; v != src; v = prev_node[v]) push = std::min(push, Rational(g[prev_node[v]][prev_arc[v]].cap));
    for (int v = snk; v != src; v = prev_node[v]) {
      Arc& e = g[prev_node[v]][prev_arc[v]];
      e.cap -= push;
      g[v][e.rev].cap += push;
    }
    remaining -= push;
  }

  TransportPlan plan;
  plan.flow.assign(m, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < m; ++i)
    for (const Arc& e : g[i])
      if (e.to >= m && e.to < m + n) {
        Rational f = total_s - e.cap;
        f.canonicalize();
        plan.flow[i][e.to - m] = f;
      }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (plan.flow[i][j] != 0) plan.cost += to_double(plan.flow[i][j]) * cost[static_cast<std::size_t>(i) * n + j];
  return plan;
}

}  // namespace bicomb
