#ifndef ESMHD_PROBLEMS_HPP_
#define ESMHD_PROBLEMS_HPP_

//! \file problems.hpp
//  \brief Initial conditions and run parameters for the standard test
//  problems: smooth Alfven wave, Brio-Wu shock tube (1D and rotated 2D),
//  Orszag-Tang vortex, MHD rotor, MHD blast wave, and the Mach-3 wind
//  tunnel with a step.

#include <functional>
#include <string>
#include <vector>

#include "esmhd/grid.hpp"
#include "esmhd/state.hpp"

namespace esmhd {

struct ProblemConfig {
  std::string name;
  Grid grid; // default resolution; resize_grid() rebuilds it
  BoundarySet bcs;
  GasModel gas{5.0 / 3.0};
  double t_end = 1.0;
  std::function<Prim(double x, double y, double z)> initializer;
  std::function<void(Grid &)> mask_builder; // optional

  // Rebuilds the grid at a new resolution, keeping the domain and mask rule.
  void resize_grid(int nx, int ny, int nz);
};

// Known names: alfven, briowu1d, briowu-entropy, briowu2d, orszag-tang,
// rotor, blast2d, blast3d, windtunnel.  Throws std::invalid_argument
// otherwise.
ProblemConfig make_problem(const std::string &name);

std::vector<std::string> problem_names();

// Circularly polarized Alfven-wave profile at phase x - t.
Prim alfven_exact(double x, double t);

// Marks the wind-tunnel step (x > 0.6, y < 0.2) as solid.
void windtunnel_mask(Grid &g);

// Evaluates the initializer at every interior cell center (solid cells
// included, so masked regions hold a valid ambient state).
void initialize(Field &f, const Grid &g, const ProblemConfig &prob);

} // namespace esmhd

#endif // ESMHD_PROBLEMS_HPP_
