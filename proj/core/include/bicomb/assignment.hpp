#pragma once

#include <vector>

#include "bicomb/rational.hpp"

namespace bicomb {

struct Assignment {
  std::vector<int> perm;  // row i -> column perm[i]
  Rational exact_cost;    // sum of cost(i, perm[i]), exact
  double cost = 0.0;      // exact_cost rounded toward zero
};

// Minimum-cost perfect matching of a dense n x n cost matrix (row-major).
// The search runs on the exact values of the entries, so ties in the real
// costs are never broken by rounding.
Assignment solve_assignment(const std::vector<double>& cost, int n);

struct TransportPlan {
  std::vector<std::vector<Rational>> flow;  // supply i -> demand j
  double cost = 0.0;
};

// Minimum-cost transport between positive rational supplies and demands of
// equal total. Flows are exact; the cost is accumulated in row-major order.
TransportPlan solve_transport(const std::vector<Rational>& supply, const std::vector<Rational>& demand,
                              const std::vector<double>& cost);

}  // namespace bicomb
