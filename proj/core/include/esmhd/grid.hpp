#ifndef ESMHD_GRID_HPP_
#define ESMHD_GRID_HPP_

//! \file grid.hpp
//  \brief Uniform Cartesian cell-average storage (1D/2D/3D) with two ghost
//  layers, per-cell fluid/solid mask, and boundary conditions.

#include <cstdint>
#include <optional>
#include <vector>

#include "esmhd/state.hpp"
#include "esmhd/types.hpp"

namespace esmhd {

enum class CellKind : std::uint8_t { Fluid = 0, Solid = 1 };

enum class BcKind { Periodic, ZeroGradient, Reflecting, Inflow };

struct BoundaryCondition {
  BcKind kind = BcKind::Periodic;
  Prim inflow; // used only for Inflow
};

// faces indexed by (axis, side): 0:xlo 1:xhi 2:ylo 3:yhi 4:zlo 5:zhi
struct BoundarySet {
  BoundaryCondition face[6];

  BoundaryCondition &at(int axis, int side) { return face[2 * axis + side]; }
  const BoundaryCondition &at(int axis, int side) const { return face[2 * axis + side]; }
  void set_all(BcKind kind) {
    for (auto &f : face) f = {kind, {}};
  }
};

struct Grid {
  static constexpr int ng = 2;

  int nx = 1, ny = 1, nz = 1;
  double dx = 1.0, dy = 1.0, dz = 1.0;
  double x0 = 0.0, y0 = 0.0, z0 = 0.0;
  std::vector<CellKind> mask; // interior cells only; empty means all fluid

  static Grid make_1d(int nx, double xmin, double xmax);
  static Grid make_2d(int nx, int ny, double xmin, double xmax, double ymin,
                      double ymax);
  static Grid make_3d(int nx, int ny, int nz, double xmin, double xmax,
                      double ymin, double ymax, double zmin, double zmax);

  int extent(int axis) const { return axis == 0 ? nx : (axis == 1 ? ny : nz); }
  double spacing(int axis) const { return axis == 0 ? dx : (axis == 1 ? dy : dz); }
  bool swept(int axis) const { return extent(axis) > 1; }
  int ndim() const { return (nx > 1) + (ny > 1) + (nz > 1); }

  double xc(int i) const { return x0 + (i + 0.5) * dx; }
  double yc(int j) const { return y0 + (j + 0.5) * dy; }
  double zc(int k) const { return z0 + (k + 0.5) * dz; }
  double cell_volume() const {
    double v = dx;
    if (ny > 1) v *= dy;
    if (nz > 1) v *= dz;
    return v;
  }

  bool is_solid(int i, int j, int k) const {
    if (mask.empty()) return false;
    return mask[static_cast<std::size_t>((k * ny + j) * nx + i)] == CellKind::Solid;
  }
  void set_solid(int i, int j, int k) {
    if (mask.empty()) mask.assign(static_cast<std::size_t>(nx) * ny * nz, CellKind::Fluid);
    mask[static_cast<std::size_t>((k * ny + j) * nx + i)] = CellKind::Solid;
  }
  std::size_t n_interior() const {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
           static_cast<std::size_t>(nz);
  }
};

// Cell-average conserved field with ghost layers in every swept direction.
// Storage is AoS: 8 doubles per cell, x-fastest.
class Field {
public:
  Field() = default;
  explicit Field(const Grid &g);

  double *cell(int i, int j, int k) { return data_.data() + 8 * index(i, j, k); }
  const double *cell(int i, int j, int k) const {
    return data_.data() + 8 * index(i, j, k);
  }

  Cons get(int i, int j, int k) const {
    const double *c = cell(i, j, k);
    return {c[0], {c[1], c[2], c[3]}, c[4], {c[5], c[6], c[7]}};
  }
  void set(int i, int j, int k, const Cons &q) {
    double *c = cell(i, j, k);
    c[0] = q.rho;
    c[1] = q.mom.x;
    c[2] = q.mom.y;
    c[3] = q.mom.z;
    c[4] = q.E;
    c[5] = q.B.x;
    c[6] = q.B.y;
    c[7] = q.B.z;
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nz() const { return nz_; }
  int gx() const { return gx_; }
  int gy() const { return gy_; }
  int gz() const { return gz_; }

  std::vector<double> &raw() { return data_; }
  const std::vector<double> &raw() const { return data_; }

private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k + gz_) * sy_ +
            static_cast<std::size_t>(j + gy_)) *
               sx_ +
           static_cast<std::size_t>(i + gx_);
  }

  int nx_ = 0, ny_ = 0, nz_ = 0;
  int gx_ = 0, gy_ = 0, gz_ = 0;
  std::size_t sx_ = 0, sy_ = 0;
  std::vector<double> data_;
};

// In-place linear combinations used by the SSP-RK stages.
void state_copy(Field &dst, const Field &src);
void state_axpy(Field &dst, double c, const Field &r);               // dst += c*r
void state_blend(Field &dst, double a, const Field &x, double b, const Field &y);

inline void state_copy(double &dst, const double &src) { dst = src; }
inline void state_axpy(double &dst, double c, const double &r) { dst += c * r; }
inline void state_blend(double &dst, double a, const double &x, double b,
                        const double &y) {
  dst = a * x + b * y;
}

// Fills the ghost layers of every swept direction.  Throws on a periodic
// face whose opposite face is not periodic.
void fill_ghosts(Field &f, const Grid &g, const BoundarySet &bcs,
                 const GasModel &gas);

} // namespace esmhd

#endif // ESMHD_GRID_HPP_
