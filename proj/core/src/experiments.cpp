#include "esmhd/experiments.hpp"

#include <cmath>

namespace esmhd {

std::string recon_name(ReconKind k) {
  switch (k) {
    case ReconKind::Constant: return "constant";
    case ReconKind::Linear: return "linear";
    default: return "minmod";
  }
}

std::string integrator_name(TimeScheme s) {
  switch (s) {
    case TimeScheme::Euler: return "euler";
    case TimeScheme::SspRk2: return "ssprk2";
    default: return "ssprk3";
  }
}

std::vector<ConvergenceRow> alfven_convergence(const ConvergenceOptions &opt) {
  std::vector<ConvergenceRow> rows;
  for (ReconKind scheme : opt.schemes) {
    double prev_l1 = 0.0, prev_l2 = 0.0;
    bool first = true;
    for (int n : opt.resolutions) {
      RunConfig cfg;
      cfg.problem = make_problem("alfven");
      cfg.problem.resize_grid(n, 1, 1);
      cfg.flux = opt.flux;
      cfg.recon = {scheme, 0.5};
      cfg.integrator.scheme = opt.integrator;
      cfg.integrator.dt_fixed = opt.dt;
      cfg.t_end = opt.t_end;
      cfg.diag_every = opt.t_end; // start and end only
      const RunResult res = run_problem(cfg);
      if (!res.completed)
        throw SolverError("alfven convergence run failed: " + res.fail_reason);

      ConvergenceRow row;
      row.scheme = recon_name(scheme);
      row.n = n;
      row.l1 = alfven_error(res.field, res.grid, res.gas, res.t, ErrorNorm::L1);
      row.l2 = alfven_error(res.field, res.grid, res.gas, res.t, ErrorNorm::L2);
      row.eoc_l1 = first ? std::nan("") : std::log2(prev_l1 / row.l1);
      row.eoc_l2 = first ? std::nan("") : std::log2(prev_l2 / row.l2);
      prev_l1 = row.l1;
      prev_l2 = row.l2;
      first = false;
      rows.push_back(row);
    }
  }
  return rows;
}

EntropySweepResult entropy_convergence(TimeScheme scheme,
                                       const EntropySweepOptions &opt) {
  EntropySweepResult out;
  out.scheme = scheme;

  for (int k = 0; k < opt.n_points; ++k) {
    const double dt = opt.dt_max / std::pow(2.0, k);
    RunConfig cfg;
    cfg.problem = make_problem(opt.problem);
    if (cfg.problem.grid.ny > 1)
      cfg.problem.resize_grid(opt.nx, opt.nx, 1);
    else
      cfg.problem.resize_grid(opt.nx, 1, 1);
    cfg.flux = FluxKind::Kepec;
    cfg.recon = {ReconKind::Constant, 0.5};
    cfg.integrator.scheme = scheme;
    cfg.integrator.dt_fixed = dt;
    cfg.t_end = opt.t_end;
    cfg.diag_every = opt.t_end;
    const RunResult res = run_problem(cfg);
    if (!res.completed)
      throw SolverError("entropy sweep run failed: " + res.fail_reason);
    out.points.push_back({dt, res.diag.rows.back().entropy_err});
  }

  // least-squares fit of log(err) vs log(dt) over the asymptotic tail: the
  // smallest time steps whose error still sits above the roundoff floor
  std::vector<EntropySweepPoint> usable;
  for (const auto &p : out.points)
    if (p.entropy_err > opt.fit_floor) usable.push_back(p);
  while (static_cast<int>(usable.size()) > opt.fit_points)
    usable.erase(usable.begin()); // points are ordered from largest dt down
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto &p : usable) {
    const double x = std::log(p.dt), y = std::log(p.entropy_err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  out.points_in_fit = m;
  out.fitted_slope =
      (m >= 2) ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : std::nan("");
  out.floor = out.points.empty() ? std::nan("") : out.points.back().entropy_err;
  for (const auto &p : out.points) out.floor = std::min(out.floor, p.entropy_err);
  return out;
}

} // namespace esmhd
