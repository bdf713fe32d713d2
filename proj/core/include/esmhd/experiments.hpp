#ifndef ESMHD_EXPERIMENTS_HPP_
#define ESMHD_EXPERIMENTS_HPP_

//! \file experiments.hpp
//  \brief Convergence and entropy-conservation experiment harnesses used by
//  the CLI subcommands and the acceptance suite.

#include <string>
#include <vector>

#include "esmhd/driver.hpp"

namespace esmhd {

struct ConvergenceRow {
  std::string scheme; // constant | linear | minmod
  int n;
  double l1, l2;
  double eoc_l1, eoc_l2; // NaN for the first resolution of a scheme
};

struct ConvergenceOptions {
  std::vector<int> resolutions{8, 16, 32, 64};
  std::vector<ReconKind> schemes{ReconKind::Constant, ReconKind::Minmod,
                                 ReconKind::Linear};
  double dt = 1.0e-5;
  double t_end = 1.0;
  FluxKind flux = FluxKind::Kepes;
  TimeScheme integrator = TimeScheme::SspRk3;
};

// Runs the smooth Alfven wave at each resolution and scheme with a fixed
// time step; errors are measured on B2 after one period.
std::vector<ConvergenceRow> alfven_convergence(const ConvergenceOptions &opt);

struct EntropySweepPoint {
  double dt;
  double entropy_err;
};

struct EntropySweepResult {
  TimeScheme scheme;
  std::vector<EntropySweepPoint> points;
  double fitted_slope;   // least-squares slope of log(err) vs log(dt) above the floor
  double floor;          // smallest measured error
  int points_in_fit;
};

struct EntropySweepOptions {
  std::string problem = "briowu-entropy"; // periodic Brio-Wu
  int nx = 64;
  // Long enough for the leading-order drift term of every integrator to
  // dominate (the flow starts at rest, so the second-order coefficient
  // builds up from zero and shorter horizons show transient superconvergence).
  double t_end = 0.01;
  double dt_max = 5.0e-4;
  int n_points = 7;     // dt_max / 2^k, k = 0..n_points-1
  double fit_floor = 1.0e-12; // points below this are excluded from the fit
  int fit_points = 4;   // asymptotic tail: smallest usable time steps
};

// Measures |total entropy drift| of the KEPEC scheme (piecewise-constant
// reconstruction) against the fixed time step, per integrator.
EntropySweepResult entropy_convergence(TimeScheme scheme,
                                       const EntropySweepOptions &opt);

std::string recon_name(ReconKind k);
std::string integrator_name(TimeScheme s);

} // namespace esmhd

#endif // ESMHD_EXPERIMENTS_HPP_
