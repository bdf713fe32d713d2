#include "esmhd/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "esmhd/problems.hpp"

namespace esmhd {

double pairwise_sum(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n <= 8) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

namespace {

// Gathers w(q)*dV over fluid cells into a buffer and pairwise-sums it.
template <class Fn>
double reduce_cells(const Field &f, const Grid &g, Fn &&fn) {
  std::vector<double> buf;
  buf.reserve(g.n_interior());
  const double dv = g.cell_volume();
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        if (g.is_solid(i, j, k)) continue;
        buf.push_back(fn(i, j, k) * dv);
      }
  return pairwise_sum(buf);
}

} // namespace

ConservedTotals conserved_totals(const Field &f, const Grid &g) {
  ConservedTotals t;
  t.mass = reduce_cells(f, g, [&](int i, int j, int k) { return f.cell(i, j, k)[0]; });
  t.momx = reduce_cells(f, g, [&](int i, int j, int k) { return f.cell(i, j, k)[1]; });
  t.momy = reduce_cells(f, g, [&](int i, int j, int k) { return f.cell(i, j, k)[2]; });
  t.momz = reduce_cells(f, g, [&](int i, int j, int k) { return f.cell(i, j, k)[3]; });
  t.energy = reduce_cells(f, g, [&](int i, int j, int k) { return f.cell(i, j, k)[4]; });
  return t;
}

double total_entropy(const Field &f, const Grid &g, const GasModel &gas) {
  return reduce_cells(f, g, [&](int i, int j, int k) {
    return entropy_density(f.get(i, j, k), gas);
  });
}

DivBEstimate div_b_estimate(const Field &f, const Grid &g) {
  DivBEstimate est;
  est.cell.assign(g.n_interior(), 0.0);
  est.max_abs = 0.0;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        if (g.is_solid(i, j, k)) continue;
        double div = 0.0;
        if (g.swept(0))
          div += (f.cell(i + 1, j, k)[5] - f.cell(i - 1, j, k)[5]) / (2.0 * g.dx);
        if (g.swept(1))
          div += (f.cell(i, j + 1, k)[6] - f.cell(i, j - 1, k)[6]) / (2.0 * g.dy);
        if (g.swept(2))
          div += (f.cell(i, j, k + 1)[7] - f.cell(i, j, k - 1)[7]) / (2.0 * g.dz);
        est.cell[(static_cast<std::size_t>(k) * g.ny + j) * g.nx + i] = div;
        est.max_abs = std::max(est.max_abs, std::fabs(div));
      }
  return est;
}

double alfven_error(const Field &f, const Grid &g, const GasModel &gas, double t,
                    ErrorNorm norm) {
  (void)gas;
  const double dv = g.cell_volume();
  std::vector<double> buf;
  buf.reserve(g.n_interior());
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const Prim exact = alfven_exact(g.xc(i), t);
        const double e = f.cell(i, j, k)[6] - exact.B.y;
        buf.push_back((norm == ErrorNorm::L1 ? std::fabs(e) : e * e) * dv);
      }
  const double s = pairwise_sum(buf);
  return norm == ErrorNorm::L1 ? s : std::sqrt(s);
}

std::vector<double> eoc(std::span<const double> errors) {
  std::vector<double> orders;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    if (errors[k] == 0.0 || errors[k + 1] == 0.0) {
      orders.push_back(0.0);
      continue;
    }
    orders.push_back(std::log2(errors[k] / errors[k + 1]));
  }
  return orders;
}

const char *RunDiagnostics::csv_header() {
  return "t,dt,mass,momx,momy,momz,energy,entropy,entropy_err,divB_max,rho_min,p_min";
}

void RunDiagnostics::write_csv(const std::string &path) const {
  std::FILE *fp = std::fopen(path.c_str(), "w");
  if (!fp) throw std::runtime_error("cannot open " + path);
  std::fprintf(fp, "%s\n", csv_header());
  for (const auto &r : rows) {
    std::fprintf(fp,
                 "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                 "%.17g,%.17g\n",
                 r.t, r.dt, r.mass, r.momx, r.momy, r.momz, r.energy, r.entropy,
                 r.entropy_err, r.div_b_max, r.rho_min, r.p_min);
  }
  std::fclose(fp);
}

DiagnosticsRow sample_diagnostics(const Field &f, const Grid &g,
                                  const GasModel &gas, double t, double dt,
                                  double entropy0) {
  DiagnosticsRow r;
  r.t = t;
  r.dt = dt;

  // scan the state first so an inadmissible cell is reported with its index
  r.rho_min = std::numeric_limits<double>::infinity();
  r.p_min = std::numeric_limits<double>::infinity();
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        if (g.is_solid(i, j, k)) continue;
        try {
          const Prim w = cons_to_prim(f.get(i, j, k), gas);
          r.rho_min = std::min(r.rho_min, w.rho);
          r.p_min = std::min(r.p_min, w.p);
        } catch (UnphysicalState &e) {
          e.i = i, e.j = j, e.k = k;
          throw;
        }
      }

  const ConservedTotals tot = conserved_totals(f, g);
  r.mass = tot.mass;
  r.momx = tot.momx;
  r.momy = tot.momy;
  r.momz = tot.momz;
  r.energy = tot.energy;
  r.entropy = total_entropy(f, g, gas);
  r.entropy_err = std::fabs(r.entropy - entropy0);
  r.div_b_max = div_b_estimate(f, g).max_abs;
  return r;
}

} // namespace esmhd
