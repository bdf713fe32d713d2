#include "esmhd/driver.hpp"

#include <cmath>

namespace esmhd {

RunResult run_problem(const RunConfig &cfg,
                      const std::function<void(const Field &, double, long)> &on_step) {
  const ProblemConfig &prob = cfg.problem;
  const double t_end = cfg.t_end.value_or(prob.t_end);

  RunResult res;
  res.grid = prob.grid;
  res.gas = prob.gas;

  Field f(res.grid);
  initialize(f, res.grid, prob);

  Field last_good = f;
  Field scratch1(res.grid), scratch2(res.grid);

  // fill ghosts once so the t=0 diagnostics (divB) see valid neighbors
  fill_ghosts(f, res.grid, prob.bcs, prob.gas);
  const double entropy0 = total_entropy(f, res.grid, prob.gas);

  const bool diag_all = !cfg.diag_every.has_value();
  const double diag_dt = cfg.diag_every.value_or(0.0);
  double next_diag = diag_dt;

  res.diag.rows.push_back(
      sample_diagnostics(f, res.grid, prob.gas, 0.0, 0.0, entropy0));

  double t = 0.0;
  long steps = 0;
  const double t_eps = 1.0e-12 * std::max(t_end, 1.0);

  auto fail = [&](const std::string &reason, int i, int j, int k) {
    res.completed = false;
    res.fail_reason = reason;
    res.fail_i = i;
    res.fail_j = j;
    res.fail_k = k;
    res.fail_step = steps;
    res.steps = steps;
    res.t = t;
    res.field = last_good;
    return res;
  };

  while (t < t_end - t_eps) {
    if (cfg.max_steps >= 0 && steps >= cfg.max_steps) break;

    // the CFL scan converts every fluid cell, certifying the current state;
    // only certified states become last_good
    double dt;
    try {
      dt = compute_dt(f, res.grid, prob.gas, cfg.integrator.cfl,
                      cfg.integrator.dt_fixed);
    } catch (const UnphysicalState &e) {
      return fail(e.what(), e.i, e.j, e.k);
    } catch (const SolverError &e) {
      return fail(e.what(), -1, -1, -1);
    }
    if (t + dt > t_end) dt = t_end - t;
    last_good = f;

    try {
      step(f, res.grid, prob.bcs, cfg.recon, cfg.flux, prob.gas,
           cfg.integrator.scheme, dt, scratch1, scratch2);
      t += dt;
      ++steps;

      const bool want_diag = diag_all ||
                             (diag_dt > 0.0 && t >= next_diag - t_eps) ||
                             t >= t_end - t_eps;
      if (want_diag) {
        fill_ghosts(f, res.grid, prob.bcs, prob.gas);
        res.diag.rows.push_back(
            sample_diagnostics(f, res.grid, prob.gas, t, dt, entropy0));
        while (diag_dt > 0.0 && next_diag <= t + t_eps) next_diag += diag_dt;
      }
      if (on_step) on_step(f, t, steps);
    } catch (const UnphysicalState &e) {
      return fail(e.what(), e.i, e.j, e.k);
    } catch (const SolverError &e) {
      return fail(e.what(), -1, -1, -1);
    }
  }

  res.completed = true;
  res.steps = steps;
  res.t = t;
  res.field = f;

  // make sure the returned field is itself admissible (the last step is
  // otherwise only certified when a diagnostics row sampled it)
  for (int k = 0; k < res.grid.nz; ++k)
    for (int j = 0; j < res.grid.ny; ++j)
      for (int i = 0; i < res.grid.nx; ++i) {
        if (res.grid.is_solid(i, j, k)) continue;
        try {
          (void)cons_to_prim(f.get(i, j, k), prob.gas);
        } catch (const UnphysicalState &e) {
          return fail(e.what(), i, j, k);
        }
      }
  return res;
}

} // namespace esmhd
