#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "document.hpp"

namespace bicomb::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kUsageError = 2;

struct SpaceCheckArgs {
  std::string space;
  std::vector<std::string> props;
  std::int64_t n = 10000;
};

struct WassersteinArgs {
  std::string space;  // optional when the measures embed one
  std::string mu, nu;
  std::string method = "flow";  // flow | assignment
  bool plan = false;
};

struct BarycenterArgs {
  std::string space;
  std::string measure;
  double tuple_tol = 0.0, limit_tol = 0.0;
  int max_k = 0;
};

struct FixpointArgs {
  std::string space, iso, x0, target;
  std::vector<std::int64_t> schedule{10, 100, 1000};
  std::string route = "auto";
  std::int64_t window = 0, shifts = 0;
};

struct DensityArgs {
  std::string visits;  // {"horizon":H,"members":[...]} or {"horizon":H,"period":p,"residues":[...]}
  std::string space, iso, x0, target;
  std::int64_t horizon = 0;
  std::int64_t window = 0, shifts = -1, offset = 0;  // 0 and -1 pick defaults from the horizon
  std::vector<std::int64_t> compare;  // further window offsets
  bool certificate = false;
  std::int64_t k0_limit = -1;
};

struct CounterexampleArgs {
  std::int64_t samples = 10000;
  int max_support = 20;
};

int run_space_check(const SpaceCheckArgs& a, const CommonOptions& common);
int run_wasserstein(const WassersteinArgs& a, const CommonOptions& common);
int run_barycenter(const BarycenterArgs& a, const CommonOptions& common);
int run_fixpoint(const FixpointArgs& a, const CommonOptions& common);
int run_density(const DensityArgs& a, const CommonOptions& common);
int run_counterexample_verify(const CounterexampleArgs& a, const CommonOptions& common);

}  // namespace bicomb::cli
