#ifndef ESMHD_DRIVER_HPP_
#define ESMHD_DRIVER_HPP_

//! \file driver.hpp
//  \brief Sequential time-marching driver shared by the CLI, the experiment
//  harnesses, and the acceptance suite.

#include <optional>
#include <string>

#include "esmhd/diagnostics.hpp"
#include "esmhd/problems.hpp"
#include "esmhd/solver.hpp"

namespace esmhd {

struct RunConfig {
  ProblemConfig problem;
  FluxKind flux = FluxKind::Kepes;
  ReconstructionScheme recon{ReconKind::Minmod, 0.5};
  TimeIntegrator integrator{};
  std::optional<double> t_end;       // overrides problem.t_end
  std::optional<double> diag_every;  // nullopt = every step; <=0 disables
  long max_steps = -1;               // <0 = unlimited
};

struct RunResult {
  bool completed = false;
  long steps = 0;
  double t = 0.0;
  std::string fail_reason; // empty when completed
  int fail_i = -1, fail_j = -1, fail_k = -1;
  long fail_step = -1;
  RunDiagnostics diag;
  Grid grid;
  Field field; // final state, or the last accepted state on failure
  GasModel gas{5.0 / 3.0};
};

// Marches the problem to t_end.  The time step is recomputed from the CFL
// condition every step (or fixed via integrator.dt_fixed) and the final step
// is clipped to land exactly on t_end.  On an unphysical state the run stops
// and the last accepted field is returned.  `on_step(field, t, step)` runs
// after every accepted step when provided.
RunResult run_problem(const RunConfig &cfg,
                      const std::function<void(const Field &, double, long)>
                          &on_step = nullptr);

} // namespace esmhd

#endif // ESMHD_DRIVER_HPP_
