#include "esmhd/grid.hpp"

#include <array>
#include <cassert>
#include <stdexcept>

namespace esmhd {

Grid Grid::make_1d(int nx, double xmin, double xmax) {
  Grid g;
  g.nx = nx;
  g.dx = (xmax - xmin) / nx;
  g.x0 = xmin;
  return g;
}

Grid Grid::make_2d(int nx, int ny, double xmin, double xmax, double ymin,
                   double ymax) {
  Grid g = make_1d(nx, xmin, xmax);
  g.ny = ny;
  g.dy = (ymax - ymin) / ny;
  g.y0 = ymin;
  return g;
}

Grid Grid::make_3d(int nx, int ny, int nz, double xmin, double xmax,
                   double ymin, double ymax, double zmin, double zmax) {
  Grid g = make_2d(nx, ny, xmin, xmax, ymin, ymax);
  g.nz = nz;
  g.dz = (zmax - zmin) / nz;
  g.z0 = zmin;
  return g;
}

Field::Field(const Grid &g)
    : nx_(g.nx), ny_(g.ny), nz_(g.nz),
      gx_(g.swept(0) ? Grid::ng : 0), gy_(g.swept(1) ? Grid::ng : 0),
      gz_(g.swept(2) ? Grid::ng : 0) {
  sx_ = static_cast<std::size_t>(nx_ + 2 * gx_);
  sy_ = static_cast<std::size_t>(ny_ + 2 * gy_);
  const std::size_t sz = static_cast<std::size_t>(nz_ + 2 * gz_);
  data_.assign(8 * sx_ * sy_ * sz, 0.0);
}

void state_copy(Field &dst, const Field &src) { dst.raw() = src.raw(); }

void state_axpy(Field &dst, double c, const Field &r) {
  auto &d = dst.raw();
  const auto &s = r.raw();
  assert(d.size() == s.size());
  for (std::size_t n = 0; n < d.size(); ++n) d[n] += c * s[n];
}

void state_blend(Field &dst, double a, const Field &x, double b, const Field &y) {
  auto &d = dst.raw();
  const auto &xs = x.raw();
  const auto &ys = y.raw();
  assert(d.size() == xs.size() && d.size() == ys.size());
  for (std::size_t n = 0; n < d.size(); ++n) d[n] = a * xs[n] + b * ys[n];
}

namespace {

// Mirror across a face with the given normal axis: normal momentum negated,
// everything else (including B) copied.
Cons reflect(const Cons &q, int axis) {
  Cons r = q;
  if (axis == 0) r.mom.x = -r.mom.x;
  if (axis == 1) r.mom.y = -r.mom.y;
  if (axis == 2) r.mom.z = -r.mom.z;
  return r;
}

} // namespace

void fill_ghosts(Field &f, const Grid &g, const BoundarySet &bcs,
                 const GasModel &gas) {
  constexpr int ng = Grid::ng;

  // Axes are filled in order; a later axis sweeps the full (already filled)
  // ghost range of earlier axes so that corner ghosts end up populated.
  for (int axis = 0; axis < 3; ++axis) {
    if (!g.swept(axis)) continue;
    const BoundaryCondition &lo = bcs.at(axis, 0);
    const BoundaryCondition &hi = bcs.at(axis, 1);
    if ((lo.kind == BcKind::Periodic) != (hi.kind == BcKind::Periodic))
      throw std::invalid_argument("fill_ghosts: unpaired periodic faces");

    const int n = g.extent(axis);

    int ilo = -f.gx(), ihi = f.nx() + f.gx();
    int jlo = -f.gy(), jhi = f.ny() + f.gy();
    int klo = -f.gz(), khi = f.nz() + f.gz();
    if (axis == 0) ilo = 0, ihi = 1;
    if (axis == 1) jlo = 0, jhi = 1;
    if (axis == 2) klo = 0, khi = 1;

    auto at = [axis](int i, int j, int k, int along) -> std::array<int, 3> {
      if (axis == 0) return {along, j, k};
      if (axis == 1) return {i, along, k};
      return {i, j, along};
    };

    auto source = [&](const BoundaryCondition &bc, int i, int j, int k, int l,
                      bool low) -> Cons {
      switch (bc.kind) {
        case BcKind::Periodic: {
          auto [si, sj, sk] = at(i, j, k, low ? n - l : l - 1);
          return f.get(si, sj, sk);
        }
        case BcKind::ZeroGradient: {
          auto [si, sj, sk] = at(i, j, k, low ? 0 : n - 1);
          return f.get(si, sj, sk);
        }
        case BcKind::Reflecting: {
          auto [si, sj, sk] = at(i, j, k, low ? l - 1 : n - l);
          return reflect(f.get(si, sj, sk), axis);
        }
        case BcKind::Inflow:
        default:
          return prim_to_cons(bc.inflow, gas);
      }
    };

    for (int k = klo; k < khi; ++k)
      for (int j = jlo; j < jhi; ++j)
        for (int i = ilo; i < ihi; ++i)
          for (int l = 1; l <= ng; ++l) {
            auto [gi, gj, gk] = at(i, j, k, -l);
            f.set(gi, gj, gk, source(lo, i, j, k, l, true));
            auto [hi_i, hi_j, hi_k] = at(i, j, k, n - 1 + l);
            f.set(hi_i, hi_j, hi_k, source(hi, i, j, k, l, false));
          }
  }
}

} // namespace esmhd
