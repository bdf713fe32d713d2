#include "esmhd/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace esmhd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Prim alfven_profile(double phase) {
  Prim w;
  w.rho = 1.0;
  w.p = 0.1;
  w.vel = {0.0, 0.1 * std::sin(kTwoPi * phase), 0.1 * std::cos(kTwoPi * phase)};
  w.B = {1.0 + w.vel.x, w.vel.y, w.vel.z};
  return w;
}

Prim briowu_state(bool left) {
  Prim w;
  w.rho = left ? 1.0 : 0.125;
  w.p = left ? 1.0 : 0.1;
  w.vel = {0.0, 0.0, 0.0};
  w.B = {0.75, left ? 1.0 : -1.0, 0.0};
  return w;
}

} // namespace

Prim alfven_exact(double x, double t) { return alfven_profile(x - t); }

void windtunnel_mask(Grid &g) {
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (g.xc(i) > 0.6 && g.yc(j) < 0.2) g.set_solid(i, j, 0);
}

void ProblemConfig::resize_grid(int nx, int ny, int nz) {
  Grid ng;
  const double x1 = grid.x0 + grid.nx * grid.dx;
  const double y1 = grid.y0 + grid.ny * grid.dy;
  const double z1 = grid.z0 + grid.nz * grid.dz;
  if (grid.nz > 1)
    ng = Grid::make_3d(nx, ny, nz, grid.x0, x1, grid.y0, y1, grid.z0, z1);
  else if (grid.ny > 1)
    ng = Grid::make_2d(nx, ny, grid.x0, x1, grid.y0, y1);
  else
    ng = Grid::make_1d(nx, grid.x0, x1);
  grid = ng;
  if (mask_builder) mask_builder(grid);
}

ProblemConfig make_problem(const std::string &name) {
  ProblemConfig pc;
  pc.name = name;

  if (name == "alfven") {
    pc.grid = Grid::make_1d(64, 0.0, 1.0);
    pc.bcs.set_all(BcKind::Periodic);
    pc.gas = {5.0 / 3.0};
    pc.t_end = 1.0;
    pc.initializer = [](double x, double, double) { return alfven_profile(x); };
    return pc;
  }

  if (name == "briowu1d" || name == "briowu-entropy") {
    pc.grid = Grid::make_1d(256, 0.0, 1.0);
    pc.bcs.set_all(BcKind::Periodic);
    pc.gas = {2.0};
    pc.t_end = (name == "briowu-entropy") ? 0.001 : 0.1;
    pc.initializer = [](double x, double, double) {
      return briowu_state(x < 0.5);
    };
    return pc;
  }

  if (name == "briowu2d") {
    // 1D data rotated 45 degrees; discontinuity along x + y = 1.
    pc.grid = Grid::make_2d(64, 64, 0.0, 1.0, 0.0, 1.0);
    pc.bcs.set_all(BcKind::Periodic);
    pc.gas = {2.0};
    pc.t_end = 0.1;
    pc.initializer = [](double x, double y, double) {
      const Prim w1 = briowu_state(x + y < 1.0);
      const double r = std::numbers::sqrt2 / 2.0;
      Prim w = w1;
      w.vel = {r * (w1.vel.x - w1.vel.y), r * (w1.vel.x + w1.vel.y), w1.vel.z};
      w.B = {r * (w1.B.x - w1.B.y), r * (w1.B.x + w1.B.y), w1.B.z};
      return w;
    };
    return pc;
  }

  if (name == "orszag-tang") {
    pc.grid = Grid::make_2d(128, 128, 0.0, 1.0, 0.0, 1.0);
    pc.bcs.set_all(BcKind::Periodic);
    pc.gas = {5.0 / 3.0};
    pc.t_end = 0.5;
    const double gamma = pc.gas.gamma;
    pc.initializer = [gamma](double x, double y, double) {
      Prim w;
      w.rho = 1.0;
      w.p = 1.0 / gamma;
      w.vel = {-std::sin(kTwoPi * y), std::sin(kTwoPi * x), 0.0};
      w.B = {-std::sin(kTwoPi * y) / gamma, std::sin(2.0 * kTwoPi * x) / gamma, 0.0};
      return w;
    };
    return pc;
  }

  if (name == "rotor") {
    pc.grid = Grid::make_2d(128, 128, 0.0, 1.0, 0.0, 1.0);
    pc.bcs.set_all(BcKind::ZeroGradient);
    pc.gas = {1.4};
    pc.t_end = 0.15;
    pc.initializer = [](double x, double y, double) {
      constexpr double r0 = 0.1, r1 = 0.115;
      const double dx = x - 0.5, dy = y - 0.5;
      const double r = std::hypot(dx, dy);
      Prim w;
      w.p = 1.0;
      w.B = {5.0 / std::sqrt(4.0 * std::numbers::pi), 0.0, 0.0};
      if (r <= r0) {
        w.rho = 10.0;
        w.vel = {-20.0 * dy, 20.0 * dx, 0.0};
      } else if (r < r1) {
        const double f = (r1 - r) / (r1 - r0);
        w.rho = 1.0 + 9.0 * f;
        w.vel = {-20.0 * f * dy, 20.0 * f * dx, 0.0};
      } else {
        w.rho = 1.0;
        w.vel = {0.0, 0.0, 0.0};
      }
      return w;
    };
    return pc;
  }

  if (name == "blast2d" || name == "blast3d") {
    const bool three_d = (name == "blast3d");
    if (three_d)
      pc.grid = Grid::make_3d(64, 64, 64, -0.5, 0.5, -0.5, 0.5, -0.5, 0.5);
    else
      pc.grid = Grid::make_2d(128, 128, -0.5, 0.5, -0.5, 0.5);
    pc.bcs.set_all(BcKind::Periodic);
    pc.gas = {1.4};
    pc.t_end = 0.01;
    pc.initializer = [three_d](double x, double y, double z) {
      constexpr double r0 = 0.09, r1 = 0.1;
      const double r =
          three_d ? std::sqrt(x * x + y * y + z * z) : std::hypot(x, y);
      Prim w;
      w.rho = 1.0;
      w.vel = {0.0, 0.0, 0.0};
      w.B = {100.0 / std::sqrt(4.0 * std::numbers::pi), 0.0, 0.0};
      if (r <= r0)
        w.p = 1000.0;
      else if (r < r1)
        w.p = 0.1 + 999.9 * (r1 - r) / (r1 - r0);
      else
        w.p = 0.1;
      return w;
    };
    return pc;
  }

  if (name == "windtunnel") {
    pc.grid = Grid::make_2d(240, 80, 0.0, 3.0, 0.0, 1.0);
    pc.gas = {1.4};
    pc.t_end = 1.0;
    Prim inflow;
    inflow.rho = 1.4;
    inflow.p = 1.0;
    inflow.vel = {3.0, 0.0, 0.0};
    inflow.B = {0.0, 0.0, 0.0};
    pc.bcs.at(0, 0) = {BcKind::Inflow, inflow};
    pc.bcs.at(0, 1) = {BcKind::ZeroGradient, {}};
    pc.bcs.at(1, 0) = {BcKind::Reflecting, {}};
    pc.bcs.at(1, 1) = {BcKind::Reflecting, {}};
    pc.initializer = [inflow](double, double, double) { return inflow; };
    pc.mask_builder = windtunnel_mask;
    pc.mask_builder(pc.grid);
    return pc;
  }

  throw std::invalid_argument("unknown problem: " + name);
}

std::vector<std::string> problem_names() {
  return {"alfven",      "briowu1d", "briowu-entropy", "briowu2d", "orszag-tang",
          "rotor",       "blast2d",  "blast3d",        "windtunnel"};
}

void initialize(Field &f, const Grid &g, const ProblemConfig &prob) {
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const Prim w = prob.initializer(g.xc(i), g.yc(j), g.zc(k));
        f.set(i, j, k, prim_to_cons(w, prob.gas));
      }
}

} // namespace esmhd
