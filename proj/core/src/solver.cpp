#include "esmhd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace esmhd {

Cons rotate_to_x(const Cons &q, int axis) {
  Cons r = q;
  if (axis == 1) {
    std::swap(r.mom.x, r.mom.y);
    std::swap(r.B.x, r.B.y);
  } else if (axis == 2) {
    std::swap(r.mom.x, r.mom.z);
    std::swap(r.B.x, r.B.z);
  }
  return r;
}

Prim rotate_to_x(const Prim &w, int axis) {
  Prim r = w;
  if (axis == 1) {
    std::swap(r.vel.x, r.vel.y);
    std::swap(r.B.x, r.B.y);
  } else if (axis == 2) {
    std::swap(r.vel.x, r.vel.z);
    std::swap(r.B.x, r.B.z);
  }
  return r;
}

Vec8 rotate_from_x(const Vec8 &f, int axis) {
  Vec8 r = f;
  if (axis == 1) {
    std::swap(r[1], r[2]);
    std::swap(r[5], r[6]);
  } else if (axis == 2) {
    std::swap(r[1], r[3]);
    std::swap(r[5], r[7]);
  }
  return r;
}

double compute_dt(const Field &f, const Grid &g, const GasModel &gas, double cfl,
                  std::optional<double> dt_fixed) {
  if (dt_fixed) return *dt_fixed;

  double lam_max[3] = {0.0, 0.0, 0.0};
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        if (g.is_solid(i, j, k)) continue;
        Prim w;
        try {
          w = cons_to_prim(f.get(i, j, k), gas);
        } catch (UnphysicalState &e) {
          e.i = i, e.j = j, e.k = k;
          throw;
        }
        const double ud[3] = {w.vel.x, w.vel.y, w.vel.z};
        const double Bd[3] = {w.B.x, w.B.y, w.B.z};
        for (int axis = 0; axis < 3; ++axis) {
          if (!g.swept(axis)) continue;
          const double cf = fast_speed(w.rho, w.p, w.B, Bd[axis], gas);
          lam_max[axis] = std::max(lam_max[axis], std::fabs(ud[axis]) + cf);
        }
      }

  double dt = std::numeric_limits<double>::infinity();
  bool any = false;
  for (int axis = 0; axis < 3; ++axis) {
    if (!g.swept(axis) || lam_max[axis] <= 0.0) continue;
    any = true;
    dt = std::min(dt, g.spacing(axis) / lam_max[axis]);
  }
  if (!any) throw SolverError("compute_dt: no positive wave speed in any direction");
  return cfl * dt;
}

namespace {

struct PencilView {
  int axis;       // sweep direction
  int n;          // interior cells along the pencil
  double dh;      // spacing along the pencil
  int t0, t1;     // fixed transverse indices (meaning depends on axis)
};

// (i,j,k) of pencil cell `c` for the given transverse indices
inline std::array<int, 3> pencil_cell(const PencilView &p, int c) {
  if (p.axis == 0) return {c, p.t0, p.t1};
  if (p.axis == 1) return {p.t0, c, p.t1};
  return {p.t0, p.t1, c};
}

} // namespace

void fv_rhs(const Field &f, const Grid &g, const ReconstructionScheme &recon,
            FluxKind flux, const GasModel &gas, Field &rhs) {
  constexpr int ng = Grid::ng;
  rhs.raw().assign(rhs.raw().size(), 0.0);

  const bool masked = !g.mask.empty();

  std::vector<Prim> line;
  std::vector<bool> solid;
  std::vector<InterfacePair> faces;
  std::vector<Vec8> fluxes, sources;

  for (int axis = 0; axis < 3; ++axis) {
    if (!g.swept(axis)) continue;
    const int n = g.extent(axis);
    const double dh = g.spacing(axis);

    const int nt0 = (axis == 0) ? g.ny : g.nx;
    const int nt1 = (axis == 2) ? g.ny : g.nz;

    line.resize(static_cast<std::size_t>(n) + 2 * ng);
    solid.assign(static_cast<std::size_t>(n) + 2 * ng, false);

    for (int t1 = 0; t1 < nt1; ++t1)
      for (int t0 = 0; t0 < nt0; ++t0) {
        const PencilView p{axis, n, dh, t0, t1};

        // gather the pencil in rotated primitive variables
        for (int c = -ng; c < n + ng; ++c) {
          auto [i, j, k] = pencil_cell(p, c);
          try {
            line[c + ng] = rotate_to_x(cons_to_prim(f.get(i, j, k), gas), axis);
          } catch (UnphysicalState &e) {
            e.i = i, e.j = j, e.k = k;
            throw;
          }
          if (masked && c >= 0 && c < n) solid[c + ng] = g.is_solid(i, j, k);
        }

        // solid cells adjacent to fluid take the mirror image of the fluid
        // neighbor (reflecting wall), up to the ghost width
        if (masked) {
          for (int c = 0; c < n; ++c) {
            if (!solid[c + ng]) continue;
            const bool fluid_below = (c == 0) ? false : !solid[c + ng - 1];
            if (fluid_below) {
              for (int l = 0; l < ng && c + l < n && solid[c + ng + l]; ++l) {
                Prim m = line[c + ng - 1 - l];
                m.vel.x = -m.vel.x;
                line[c + ng + l] = m;
              }
            }
          }
          for (int c = n - 1; c >= 0; --c) {
            if (!solid[c + ng]) continue;
            const bool fluid_above = (c == n - 1) ? false : !solid[c + ng + 1];
            if (fluid_above) {
              for (int l = 0; l < ng && c - l >= 0 && solid[c + ng - l]; ++l) {
                Prim m = line[c + ng + 1 + l];
                m.vel.x = -m.vel.x;
                line[c + ng - l] = m;
              }
            }
          }
        }

        reconstruct(line, n, recon, dh, faces);

        fluxes.resize(static_cast<std::size_t>(n) + 1);
        sources.resize(static_cast<std::size_t>(n) + 1);
        for (int e = 0; e <= n; ++e) {
          // skip interfaces buried inside the solid region
          if (masked) {
            const bool lo_solid = (e > 0) ? solid[e + ng - 1] : false;
            const bool hi_solid = (e < n) ? solid[e + ng] : false;
            if (lo_solid && hi_solid) {
              fluxes[e] = Vec8{};
              sources[e] = Vec8{};
              continue;
            }
          }
          const Prim &wl = faces[e].left;
          const Prim &wr = faces[e].right;
          const InterfaceMeans m = interface_means(wl, wr, gas);
          Vec8 fx;
          switch (flux) {
            case FluxKind::Kepec:
              fx = kepec_flux(m);
              break;
            case FluxKind::Kepes:
              fx = kepes_flux(m, MeanPolicy::EntropyScaled);
              break;
            default:
              fx = kepes_flux(m, MeanPolicy::Naive);
              break;
          }
          fluxes[e] = rotate_from_x(fx, axis);
          sources[e] = rotate_from_x(
              janhunen_source_interface(m, dh, dh, kSourceAmpCap), axis);
        }

        for (int c = 0; c < n; ++c) {
          if (masked && solid[c + ng]) continue;
          auto [i, j, k] = pencil_cell(p, c);
          double *out = rhs.cell(i, j, k);
          const Vec8 &fm = fluxes[c], &fp = fluxes[c + 1];
          const Vec8 &sm = sources[c], &sp = sources[c + 1];
          for (int comp = 0; comp < 8; ++comp)
            out[comp] += -(fp[comp] - fm[comp]) / dh + 0.5 * (sp[comp] + sm[comp]);
        }
      }
  }

  if (masked) {
    for (int k = 0; k < g.nz; ++k)
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
          if (g.is_solid(i, j, k)) {
            double *out = rhs.cell(i, j, k);
            for (int comp = 0; comp < 8; ++comp) out[comp] = 0.0;
          }
  }
}

void step(Field &f, const Grid &g, const BoundarySet &bcs,
          const ReconstructionScheme &recon, FluxKind flux, const GasModel &gas,
          TimeScheme scheme, double dt, Field &scratch1, Field &scratch2) {
  auto rhs_fn = [&](Field &state, Field &out) {
    fill_ghosts(state, g, bcs, gas);
    fv_rhs(state, g, recon, flux, gas, out);
  };
  ssp_step(scheme, f, dt, rhs_fn, scratch1, scratch2);
}

} // namespace esmhd
