#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "bicomb/barycenter.hpp"
#include "bicomb/checks.hpp"
#include "bicomb/counterexample.hpp"
#include "bicomb/dynamics.hpp"
#include "bicomb/errors.hpp"
#include "bicomb/io.hpp"
#include "bicomb/wasserstein.hpp"

namespace bicomb::cli {

namespace {

std::string point_csv(const Point& p) {
  std::ostringstream os;
  if (auto e = std::get_if<EuclidPoint>(&p)) {
    for (std::size_t i = 0; i < e->coords.size(); ++i) os << (i ? ";" : "") << number(e->coords[i]);
  } else if (auto q = std::get_if<SparseSeq>(&p)) {
    bool first = true;
    for (const auto& [i, v] : q->entries()) {
      os << (first ? "" : ";") << i << ":" << to_string(v);
      first = false;
    }
  } else {
    const auto& t = std::get<TreePoint>(p);
    os << t.leg << ":" << number(t.r);
  }
  return os.str();
}

json stats_json(const BaryStats& s) {
  return {{"evaluations", s.evaluations},
          {"memo_hits", s.memo_hits},
          {"midpoints", s.midpoints},
          {"stalls", s.stalls},
          {"worst_stall", s.worst_stall}};
}

json density_json(const DensityEstimate& d, std::int64_t offset) {
  return {{"value", d.value},    {"exact", to_string(d.exact())}, {"best_count", d.best_count},
          {"window", d.window},  {"shifts", d.shifts},            {"best_shift", d.best_shift},
          {"offset", offset}};
}

// Measures may embed their space; --space overrides it.
AtomicMeasure read_measure(RunDocument& doc, const std::optional<Space>& space, const std::string& role,
                           const std::string& path) {
  json j = doc.load(role, path);
  if (j.contains("measure")) j = j.at("measure");
  return space ? measure_from_json(*space, j) : measure_from_json(j);
}

std::optional<Space> read_optional_space(RunDocument& doc, const std::string& path) {
  if (path.empty()) return std::nullopt;
  return space_from_json(doc.load("space", path));
}

void read_bary_config(const json& j, BaryConfig& cfg) {
  if (!j.is_object()) throw ParseError("config must be an object");
  try {
    if (j.contains("tuple_tol")) cfg.tuple_tol = j.at("tuple_tol").get<double>();
    if (j.contains("limit_tol")) cfg.limit_tol = j.at("limit_tol").get<double>();
    if (j.contains("max_k")) cfg.max_k = j.at("max_k").get<int>();
    if (j.contains("max_tuple_size")) cfg.max_tuple_size = j.at("max_tuple_size").get<int>();
    if (j.contains("max_iterations")) cfg.max_iterations = j.at("max_iterations").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

void check_bary_config(const BaryConfig& cfg) {
  if (!(cfg.tuple_tol > 0) || !(cfg.limit_tol > 0)) throw ParseError("tolerances must be positive");
  if (cfg.max_k < 1 || cfg.max_tuple_size < 1 || cfg.max_iterations < 1) throw ParseError("caps must be at least 1");
}

BarycenterRoute parse_route(const std::string& s) {
  if (s == "auto") return BarycenterRoute::automatic;
  if (s == "recursive") return BarycenterRoute::recursive;
  if (s == "mean") return BarycenterRoute::mean;
  throw ParseError("route must be auto, recursive or mean");
}

}  // namespace

int run_space_check(const SpaceCheckArgs& a, const CommonOptions& common) {
  RunDocument doc("space-check", common);
  Space space = space_from_json(doc.load("space", a.space));
  std::vector<std::string> props = a.props;
  if (props.empty()) props = check_names();
  auto known = check_names();
  known.push_back("strict-convexity");
  for (const auto& p : props)
    if (std::find(known.begin(), known.end(), p) == known.end()) throw ParseError("unknown property '" + p + "'");
  if (a.n < 1) throw ParseError("--n must be positive");

  CheckOptions opt;
  opt.samples = a.n;
  opt.seed = common.seed;
  opt.tolerance = doc.tol(kDefaultCheckTolerance);
  doc.param("props", props);
  doc.param("n", a.n);
  doc.param("tol", opt.tolerance);

  json reports = json::array();
  std::vector<std::vector<std::string>> rows;
  bool pass = true;
  for (const auto& p : props) {
    PropertyReport r = run_check(space, p, opt);
    pass = pass && r.pass;
    reports.push_back(to_json(r));
    rows.push_back({r.name, std::to_string(r.samples), number(r.margin), number(r.tolerance), r.pass ? "true" : "false"});
  }
  json result = {{"space", space_to_json(space)}, {"pass", pass}, {"reports", reports}};
  doc.write(result, {"property", "samples", "margin", "tolerance", "pass"}, rows);
  return pass ? kOk : kPropertyFailure;
}

int run_wasserstein(const WassersteinArgs& a, const CommonOptions& common) {
  RunDocument doc("wasserstein", common);
  auto space = read_optional_space(doc, a.space);
  AtomicMeasure mu = read_measure(doc, space, "mu", a.mu);
  AtomicMeasure nu = read_measure(doc, space, "nu", a.nu);
  if (mu.space().kind() != nu.space().kind()) throw ParseError("mu and nu live in different spaces");
  if (a.method != "flow" && a.method != "assignment") throw ParseError("--method must be flow or assignment");
  if (a.plan && a.method != "flow") throw ParseError("--plan needs --method flow");
  doc.param("method", a.method);

  json result = {{"method", a.method}};
  double value = 0;
  if (a.method == "assignment") {
    value = w1_expanded(mu, nu);
  } else {
    TransportPlan plan = w1_atomic_plan(mu, nu);
    value = plan.cost;
    if (a.plan) {
      json arcs = json::array();
      for (std::size_t i = 0; i < plan.flow.size(); ++i)
        for (std::size_t j = 0; j < plan.flow[i].size(); ++j)
          if (plan.flow[i][j] != 0) arcs.push_back({i, j, to_string(plan.flow[i][j])});
      result["plan"] = arcs;
    }
  }
  result["value"] = value;
  doc.write(result, {"method", "value"}, {{a.method, number(value)}});
  return kOk;
}

int run_barycenter(const BarycenterArgs& a, const CommonOptions& common) {
  RunDocument doc("barycenter", common);
  auto space = read_optional_space(doc, a.space);
  json j = doc.load("measure", a.measure);
  BaryConfig cfg;
  if (j.contains("config")) read_bary_config(j.at("config"), cfg);
  if (a.tuple_tol > 0) cfg.tuple_tol = a.tuple_tol;
  if (a.limit_tol > 0) cfg.limit_tol = a.limit_tol;
  if (a.max_k > 0) cfg.max_k = a.max_k;
  check_bary_config(cfg);
  const json& mj = j.contains("measure") ? j.at("measure") : j;
  AtomicMeasure mu = space ? measure_from_json(*space, mj) : measure_from_json(mj);
  double tol = doc.tol(1e-9);
  doc.param("config", {{"tuple_tol", cfg.tuple_tol},
                       {"limit_tol", cfg.limit_tol},
                       {"max_k", cfg.max_k},
                       {"max_tuple_size", cfg.max_tuple_size},
                       {"max_iterations", cfg.max_iterations}});
  doc.param("tol", tol);

  json result;
  std::vector<std::vector<std::string>> rows;
  try {
    BetaResult b = beta(mu, cfg);
    LocalityCertificate loc = locality_certificate(mu, b.point, tol);
    result = {{"point", point_to_json(b.point)},
              {"k_used", b.k_used},
              {"residual", b.residual},
              {"tuple_size", b.tuple_size},
              {"stats", stats_json(b.stats)},
              {"locality", {{"distance", loc.distance}, {"pass", loc.pass}, {"method", loc.method}}}};
    rows = {{"point", point_csv(b.point)},
            {"k_used", std::to_string(b.k_used)},
            {"residual", number(b.residual)},
            {"locality_distance", number(loc.distance)}};
    if (mu.space().kind() != SpaceKind::tree) {
      Point m = banach_mean(mu);
      double gap = mu.space().dist(m, b.point);
      result["mean"] = point_to_json(m);
      result["mean_distance"] = gap;
      rows.push_back({"mean_distance", number(gap)});
    }
  } catch (const ConvergenceError& e) {
    result = {{"error", e.what()}, {"gap", e.gap()}};
    doc.write(result, {"field", "value"}, {{"error", "convergence"}, {"gap", number(e.gap())}});
    return kPropertyFailure;
  } catch (const BudgetExceeded& e) {
    result = {{"error", e.what()}};
    doc.write(result, {"field", "value"}, {{"error", "budget"}});
    return kPropertyFailure;
  }
  doc.write(result, {"field", "value"}, rows);
  return kOk;
}

int run_fixpoint(const FixpointArgs& a, const CommonOptions& common) {
  RunDocument doc("fixpoint", common);
  Space space = space_from_json(doc.load("space", a.space));
  Isometry phi = isometry_from_json(space, doc.load("iso", a.iso));
  Point x0 = point_from_json(space, doc.load("x0", a.x0));
  TargetSet target = target_from_json(space, doc.load("target", a.target));
  FixedPointParams params;
  params.schedule = a.schedule;
  if (params.schedule.empty()) throw ParseError("--schedule is empty");
  for (std::size_t i = 0; i < params.schedule.size(); ++i)
    if (params.schedule[i] < 1 || (i && params.schedule[i] <= params.schedule[i - 1]))
      throw ParseError("--schedule must be positive and increasing");
  params.tol = doc.tol(params.tol);
  params.route = parse_route(a.route);
  params.density_window = a.window;
  params.density_shifts = a.shifts;
  doc.param("schedule", params.schedule);
  doc.param("tol", params.tol);
  doc.param("route", a.route);
  doc.param("window", a.window);
  doc.param("shifts", a.shifts);

  FixedPointResult r = fixed_point_solve(space, phi, x0, target, params);
  json steps = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : r.steps) {
    json js = {{"n", s.n}, {"residual", s.residual}, {"cauchy_gap", s.cauchy_gap}, {"k_used", s.k_used}};
    if (s.error.empty()) js["point"] = point_to_json(s.point);
    else js["error"] = s.error;
    steps.push_back(js);
    rows.push_back({std::to_string(s.n), number(s.residual), number(s.cauchy_gap), std::to_string(s.k_used)});
  }
  json result = {{"status", to_string(r.status)},
                 {"point", r.point ? point_to_json(*r.point) : json(nullptr)},
                 {"residual_series", r.residual_series},
                 {"steps", steps},
                 {"density", density_json(r.density, 0)},
                 {"reason", r.reason}};
  doc.write(result, {"n", "residual", "cauchy_gap", "k_used"}, rows);
  return kOk;
}

int run_density(const DensityArgs& a, const CommonOptions& common) {
  RunDocument doc("density", common);
  const bool orbit_mode = !a.space.empty();
  if (orbit_mode == !a.visits.empty()) throw ParseError("give either --visits or --space/--iso/--x0/--target");
  if (a.certificate && !orbit_mode) throw ParseError("--certificate needs an orbit (--space/--iso/--x0/--target)");

  std::vector<std::uint8_t> indicator;
  std::optional<OrbitTrace> trace;
  double diameter = 0;
  if (orbit_mode) {
    if (a.iso.empty() || a.x0.empty() || a.target.empty()) throw ParseError("orbit mode needs --iso, --x0 and --target");
    if (a.horizon < 1) throw ParseError("--horizon must be positive");
    Space space = space_from_json(doc.load("space", a.space));
    Isometry phi = isometry_from_json(space, doc.load("iso", a.iso));
    Point x0 = point_from_json(space, doc.load("x0", a.x0));
    TargetSet target = target_from_json(space, doc.load("target", a.target));
    trace = orbit(space, phi, x0, a.horizon, target);
    indicator = trace->visits;
    diameter = target.diameter_bound(space);
  } else {
    json j = doc.load("visits", a.visits);
    try {
      std::int64_t H = j.at("horizon").get<std::int64_t>();
      if (H < 1) throw ParseError("horizon must be positive");
      indicator.assign(static_cast<std::size_t>(H), 0);
      if (j.contains("period")) {
        std::int64_t p = j.at("period").get<std::int64_t>();
        if (p < 1) throw ParseError("period must be positive");
        for (auto r : j.at("residues").get<std::vector<std::int64_t>>())
          for (std::int64_t k = ((r % p) + p) % p; k < H; k += p) indicator[k] = 1;
      } else {
        for (auto k : j.at("members").get<std::vector<std::int64_t>>()) {
          if (k < 0 || k >= H) throw ParseError("member " + std::to_string(k) + " outside the horizon");
          indicator[k] = 1;
        }
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("visits: ") + e.what());
    }
  }
  const auto H = static_cast<std::int64_t>(indicator.size());
  std::int64_t K = a.window > 0 ? a.window : H / 2;
  std::int64_t L = a.shifts >= 0 ? a.shifts : H - K - a.offset;
  doc.param("window", K);
  doc.param("shifts", L);
  doc.param("offset", a.offset);
  doc.param("compare", a.compare);
  doc.param("horizon", H);

  auto estimate = [&](std::int64_t offset) {
    try {
      return banach_density_estimate(indicator, K, L, offset);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  };
  DensityEstimate base = estimate(a.offset);
  json families = json::array();
  std::vector<std::vector<std::string>> rows;
  families.push_back(density_json(base, a.offset));
  rows.push_back({std::to_string(a.offset), std::to_string(K), std::to_string(L), number(base.value),
                  to_string(base.exact())});
  double spread = 0;
  for (auto off : a.compare) {
    DensityEstimate d = estimate(off);
    spread = std::max(spread, std::fabs(d.value - base.value));
    families.push_back(density_json(d, off));
    rows.push_back({std::to_string(off), std::to_string(K), std::to_string(L), number(d.value), to_string(d.exact())});
  }
  json result = {{"horizon", H}, {"estimate", density_json(base, a.offset)}, {"families", families},
                 {"family_spread", spread}};

  int code = kOk;
  if (a.certificate) {
    OrbitBoundCertificate c = orbit_bound_certificate(*trace, diameter, a.k0_limit);
    result["certificate"] = {{"found", c.found},       {"k0", c.k0},       {"C", c.C},
                             {"diameter", c.diameter}, {"bound", c.bound}, {"max_observed", c.max_observed},
                             {"holds", c.holds},       {"reason", c.reason}};
    if (!(c.found && c.holds)) code = kPropertyFailure;
  }
  doc.write(result, {"offset", "window", "shifts", "value", "exact"}, rows);
  return code;
}

int run_counterexample_verify(const CounterexampleArgs& a, const CommonOptions& common) {
  RunDocument doc("counterexample verify", common);
  if (a.samples < 1) throw ParseError("--samples must be positive");
  if (a.max_support < 1) throw ParseError("--max-support must be positive");
  doc.param("samples", a.samples);
  doc.param("max_support", a.max_support);
  VerificationBundle b = verify_counterexample(a.samples, a.max_support, common.seed);
  json checks = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : b.checks) {
    checks.push_back(to_json(r));
    rows.push_back({r.name, std::to_string(r.samples), number(r.margin), r.pass ? "true" : "false"});
  }
  json result = {{"pass", b.pass}, {"checks", checks}};
  doc.write(result, {"check", "samples", "margin", "pass"}, rows);
  return b.pass ? kOk : kPropertyFailure;
}

}  // namespace bicomb::cli
