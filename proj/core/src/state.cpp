#include "esmhd/state.hpp"

#include <cmath>

namespace esmhd {

std::string UnphysicalState::describe(Kind kind, double rho, double p) {
  switch (kind) {
    case Kind::NonPositiveDensity:
      return "non-positive density rho=" + std::to_string(rho);
    case Kind::NonPositivePressure:
      return "non-positive pressure p=" + std::to_string(p) +
             " (rho=" + std::to_string(rho) + ")";
    default:
      return "non-finite state (rho=" + std::to_string(rho) +
             ", p=" + std::to_string(p) + ")";
  }
}

Cons prim_to_cons(const Prim &w, const GasModel &g) {
  bool finite = std::isfinite(w.rho) && std::isfinite(w.p) &&
                std::isfinite(w.vel.x) && std::isfinite(w.vel.y) &&
                std::isfinite(w.vel.z) && std::isfinite(w.B.x) &&
                std::isfinite(w.B.y) && std::isfinite(w.B.z);
  if (!finite) throw UnphysicalState(UnphysicalState::Kind::NotFinite, w.rho, w.p);

  Cons q;
  q.rho = w.rho;
  q.mom = w.vel * w.rho;
  q.E = w.p / (g.gamma - 1.0) + 0.5 * w.rho * w.vel.norm2() + 0.5 * w.B.norm2();
  q.B = w.B;
  return q;
}

Prim cons_to_prim(const Cons &q, const GasModel &g) {
  if (!(q.rho > 0.0) || !std::isfinite(q.rho))
    throw UnphysicalState(UnphysicalState::Kind::NonPositiveDensity, q.rho, 0.0);

  Prim w;
  w.rho = q.rho;
  w.vel = q.mom * (1.0 / q.rho);
  w.B = q.B;
  w.p = (g.gamma - 1.0) * (q.E - 0.5 * q.rho * w.vel.norm2() - 0.5 * q.B.norm2());
  if (!(w.p > 0.0) || !std::isfinite(w.p))
    throw UnphysicalState(UnphysicalState::Kind::NonPositivePressure, q.rho, w.p);
  return w;
}

Vec8 physical_flux_x(const Prim &w, const GasModel &g) {
  const double u = w.vel.x, v = w.vel.y, wz = w.vel.z;
  const double B1 = w.B.x, B2 = w.B.y, B3 = w.B.z;
  const double pmag = 0.5 * w.B.norm2();

  Vec8 f;
  f[0] = w.rho * u;
  f[1] = w.rho * u * u + w.p + pmag - B1 * B1;
  f[2] = w.rho * u * v - B1 * B2;
  f[3] = w.rho * u * wz - B1 * B3;
  f[4] = 0.5 * w.rho * u * w.vel.norm2() + g.gamma * u * w.p / (g.gamma - 1.0) +
         u * (B2 * B2 + B3 * B3) - B1 * (v * B2 + wz * B3);
  f[5] = 0.0;
  f[6] = u * B2 - v * B1;
  f[7] = u * B3 - wz * B1;
  return f;
}

Vec8 physical_flux_x(const Cons &q, const GasModel &g) {
  return physical_flux_x(cons_to_prim(q, g), g);
}

double entropy_density(const Prim &w, const GasModel &g) {
  const double s = std::log(w.p) - g.gamma * std::log(w.rho);
  return -w.rho * s / (g.gamma - 1.0);
}

double entropy_density(const Cons &q, const GasModel &g) {
  return entropy_density(cons_to_prim(q, g), g);
}

double entropy_flux_x(const Prim &w, const GasModel &g) {
  return w.vel.x * entropy_density(w, g);
}

double entropy_potential_x(const Prim &w, const GasModel &g) {
  (void)g;
  const double u = w.vel.x;
  return w.rho * u +
         (w.rho / w.p) * (0.5 * u * w.B.norm2() - w.B.x * dot(w.vel, w.B));
}

EntropyVars entropy_variables(const Prim &w, const GasModel &g) {
  const double s = std::log(w.p) - g.gamma * std::log(w.rho);
  const double beta = beta_of(w);

  EntropyVars ev;
  ev.v[0] = (g.gamma - s) / (g.gamma - 1.0) - beta * w.vel.norm2();
  ev.v[1] = 2.0 * beta * w.vel.x;
  ev.v[2] = 2.0 * beta * w.vel.y;
  ev.v[3] = 2.0 * beta * w.vel.z;
  ev.v[4] = -2.0 * beta;
  ev.v[5] = 2.0 * beta * w.B.x;
  ev.v[6] = 2.0 * beta * w.B.y;
  ev.v[7] = 2.0 * beta * w.B.z;
  return ev;
}

EntropyVars entropy_variables(const Cons &q, const GasModel &g) {
  return entropy_variables(cons_to_prim(q, g), g);
}

// Stable sum/difference-of-roots evaluation of the magnetoacoustic quartic:
// c_f = (sqrt(a^2+b^2+2a|b1|) + sqrt(a^2+b^2-2a|b1|))/2 and c_f c_s = a|b1|,
// which avoids cancellation near the triple degeneracy.
static void fast_slow(double a2, double b2, double b1sq, double &cf, double &cs) {
  const double y = std::sqrt(std::max(a2 * b1sq, 0.0));
  const double rp = std::max(a2 + b2 + 2.0 * y, 0.0);
  const double rm = std::max(a2 + b2 - 2.0 * y, 0.0);
  const double sp = std::sqrt(rp), sm = std::sqrt(rm);
  cf = 0.5 * (sp + sm);
  cs = 0.5 * (sp - sm);
  if (cs < 0.0) cs = 0.0;
}

WaveSpeeds wave_speeds_x(const Prim &w, const GasModel &g) {
  const double a2 = g.gamma * w.p / w.rho;
  const double b1sq = w.B.x * w.B.x / w.rho;
  const double b2 = w.B.norm2() / w.rho;

  WaveSpeeds ws;
  ws.a = std::sqrt(a2);
  ws.c_a = std::sqrt(b1sq);
  fast_slow(a2, b2, b1sq, ws.c_f, ws.c_s);
  return ws;
}

double fast_speed(double rho, double p, const Vec3 &B, double Bn, const GasModel &g) {
  const double a2 = g.gamma * p / rho;
  const double b2 = B.norm2() / rho;
  const double bnsq = Bn * Bn / rho;
  double cf, cs;
  fast_slow(a2, b2, bnsq, cf, cs);
  return cf;
}

} // namespace esmhd
