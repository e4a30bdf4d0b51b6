#include <iostream>

#include <CLI11.hpp>

#include "bicomb/errors.hpp"
#include "commands.hpp"

using namespace bicomb::cli;

namespace {

void add_common(CLI::App* app, CommonOptions& c) {
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--tol", c.tol, "tolerance override");
  app->add_option("--out", c.out, "write the result here instead of stdout");
  app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicombings, barycenters and fixed points on metric spaces"};
  app.require_subcommand(1);
  CommonOptions common;

  SpaceCheckArgs sc;
  auto* space_check = app.add_subcommand("space-check", "sample the bicombing axioms");
  space_check->add_option("--space", sc.space, "space descriptor")->required();
  space_check->add_option("--props", sc.props, "comma separated checks")->delimiter(',');
  space_check->add_option("--n", sc.n, "samples per check");
  add_common(space_check, common);

  WassersteinArgs ws;
  auto* wasserstein = app.add_subcommand("wasserstein", "W1 between two atomic measures");
  wasserstein->add_option("--space", ws.space, "space descriptor");
  wasserstein->add_option("--mu", ws.mu)->required();
  wasserstein->add_option("--nu", ws.nu)->required();
  wasserstein->add_option("--method", ws.method, "flow or assignment");
  wasserstein->add_flag("--plan", ws.plan, "include the optimal plan");
  add_common(wasserstein, common);

  BarycenterArgs bc;
  auto* barycenter = app.add_subcommand("barycenter", "contracting barycenter of an atomic measure");
  barycenter->add_option("--space", bc.space, "space descriptor");
  barycenter->add_option("--measure", bc.measure)->required();
  barycenter->add_option("--tuple-tol", bc.tuple_tol);
  barycenter->add_option("--limit-tol", bc.limit_tol);
  barycenter->add_option("--max-k", bc.max_k);
  add_common(barycenter, common);

  FixpointArgs fp;
  auto* fixpoint = app.add_subcommand("fixpoint", "fixed point of an isometry from Cesaro barycenters");
  fixpoint->add_option("--space", fp.space)->required();
  fixpoint->add_option("--iso", fp.iso)->required();
  fixpoint->add_option("--x0", fp.x0)->required();
  fixpoint->add_option("--target", fp.target)->required();
  fixpoint->add_option("--schedule", fp.schedule, "horizons, comma separated")->delimiter(',');
  fixpoint->add_option("--route", fp.route, "auto, recursive or mean");
  fixpoint->add_option("--window", fp.window, "density window K (0: half the horizon)");
  fixpoint->add_option("--shifts", fp.shifts, "density shifts L (0: the rest)");
  add_common(fixpoint, common);

  DensityArgs ds;
  auto* density = app.add_subcommand("density", "upper Banach density estimate and orbit bound");
  density->add_option("--visits", ds.visits, "visit set document");
  density->add_option("--space", ds.space);
  density->add_option("--iso", ds.iso);
  density->add_option("--x0", ds.x0);
  density->add_option("--target", ds.target);
  density->add_option("--horizon", ds.horizon, "orbit length");
  density->add_option("--window", ds.window, "window K (0: half the horizon)");
  density->add_option("--shifts", ds.shifts, "shift horizon L (-1: the rest)");
  density->add_option("--offset", ds.offset, "start of the window family");
  density->add_option("--compare", ds.compare, "further window offsets")->delimiter(',');
  density->add_flag("--certificate", ds.certificate, "orbit bound certificate");
  density->add_option("--k0-limit", ds.k0_limit, "largest admissible k0 (-1: half the horizon)");
  add_common(density, common);

  CounterexampleArgs cx;
  auto* counterexample = app.add_subcommand("counterexample", "the fixed point free shift space");
  counterexample->require_subcommand(1);
  auto* verify = counterexample->add_subcommand("verify", "run the seven checks");
  verify->add_option("--samples", cx.samples);
  verify->add_option("--max-support", cx.max_support);
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*space_check) return run_space_check(sc, common);
    if (*wasserstein) return run_wasserstein(ws, common);
    if (*barycenter) return run_barycenter(bc, common);
    if (*fixpoint) return run_fixpoint(fp, common);
    if (*density) return run_density(ds, common);
    if (*verify) return run_counterexample_verify(cx, common);
  } catch (const bicomb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const bicomb::KindMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const bicomb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPropertyFailure;
  }
  return kUsageError;
}
