#include "esmhd/means.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace esmhd {

double log_mean(double a, double b) {
  assert(a > 0.0 && b > 0.0);
  if (a < b) std::swap(a, b); // bitwise symmetric in the arguments
  const double zeta = a / b;
  const double f = (zeta - 1.0) / (zeta + 1.0);
  const double u = f * f;
  // Ismail & Roe series, truncated after u^3.  The switch point keeps the
  // truncation error (~u^4/9) below roundoff; at u >= 1e-4 the direct
  // formula is accurate to ~eps/|ln zeta| <= 1.2e-14.
  if (u < 1.0e-4) {
    return 0.5 * (a + b) / (1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u / 7.0)));
  }
  return (a - b) / std::log(zeta);
}

JumpResiduals jump_properties_check(double aL, double aR, double bL, double bR) {
  const double ja = aR - aL, jb = bR - bL;
  const double ma = 0.5 * (aL + aR), mb = 0.5 * (bL + bR);
  JumpResiduals r;
  r.product = (aR * bR - aL * bL) - (ma * jb + mb * ja);
  r.square = (aR * aR - aL * aL) - 2.0 * ma * ja;
  return r;
}

InterfaceMeans interface_means(const Prim &wL, const Prim &wR, const GasModel &g) {
  InterfaceMeans m;
  m.L = wL;
  m.R = wR;
  m.gamma = g.gamma;

  const double betaL = beta_of(wL), betaR = beta_of(wR);

  auto avg = [](double l, double r) { return 0.5 * (l + r); };

  m.j_rho = wR.rho - wL.rho;
  m.j_u = wR.vel.x - wL.vel.x;
  m.j_v = wR.vel.y - wL.vel.y;
  m.j_w = wR.vel.z - wL.vel.z;
  m.j_p = wR.p - wL.p;
  m.j_beta = betaR - betaL;
  m.j_B1 = wR.B.x - wL.B.x;
  m.j_B2 = wR.B.y - wL.B.y;
  m.j_B3 = wR.B.z - wL.B.z;
  m.j_entropy_vars = entropy_variables(wR, g).v - entropy_variables(wL, g).v;

  m.rho = avg(wL.rho, wR.rho);
  m.u = avg(wL.vel.x, wR.vel.x);
  m.v = avg(wL.vel.y, wR.vel.y);
  m.w = avg(wL.vel.z, wR.vel.z);
  m.p = avg(wL.p, wR.p);
  m.beta = avg(betaL, betaR);
  m.B1 = avg(wL.B.x, wR.B.x);
  m.B2 = avg(wL.B.y, wR.B.y);
  m.B3 = avg(wL.B.z, wR.B.z);

  m.u2 = avg(wL.vel.x * wL.vel.x, wR.vel.x * wR.vel.x);
  m.v2 = avg(wL.vel.y * wL.vel.y, wR.vel.y * wR.vel.y);
  m.w2 = avg(wL.vel.z * wL.vel.z, wR.vel.z * wR.vel.z);
  m.B1B1 = avg(wL.B.x * wL.B.x, wR.B.x * wR.B.x);
  m.B2B2 = avg(wL.B.y * wL.B.y, wR.B.y * wR.B.y);
  m.B3B3 = avg(wL.B.z * wL.B.z, wR.B.z * wR.B.z);
  m.B1B2 = avg(wL.B.x * wL.B.y, wR.B.x * wR.B.y);
  m.B1B3 = avg(wL.B.x * wL.B.z, wR.B.x * wR.B.z);
  m.uB1B1 = avg(wL.vel.x * wL.B.x * wL.B.x, wR.vel.x * wR.B.x * wR.B.x);
  m.uB2B2 = avg(wL.vel.x * wL.B.y * wL.B.y, wR.vel.x * wR.B.y * wR.B.y);
  m.uB3B3 = avg(wL.vel.x * wL.B.z * wL.B.z, wR.vel.x * wR.B.z * wR.B.z);
  m.vB1B2 = avg(wL.vel.y * wL.B.x * wL.B.y, wR.vel.y * wR.B.x * wR.B.y);
  m.wB1B3 = avg(wL.vel.z * wL.B.x * wL.B.z, wR.vel.z * wR.B.x * wR.B.z);
  m.betaB1 = avg(betaL * wL.B.x, betaR * wR.B.x);
  m.betaB2 = avg(betaL * wL.B.y, betaR * wR.B.y);
  m.betaB3 = avg(betaL * wL.B.z, betaR * wR.B.z);
  m.beta2 = avg(betaL * betaL, betaR * betaR);
  m.inv_rho = avg(1.0 / wL.rho, 1.0 / wR.rho);
  m.B1_rho = avg(wL.B.x / wL.rho, wR.B.x / wR.rho);
  m.B2_rho = avg(wL.B.y / wL.rho, wR.B.y / wR.rho);
  m.B3_rho = avg(wL.B.z / wL.rho, wR.B.z / wR.rho);

  m.rho_ln = log_mean(wL.rho, wR.rho);
  m.beta_ln = log_mean(betaL, betaR);

  m.p_ln = 0.5 * m.rho_ln / m.beta_ln;
  m.p_tilde = 0.5 * m.rho / m.beta;
  m.tau = 0.5 / m.beta;
  m.u2bar = 2.0 * (m.u * m.u + m.v * m.v + m.w * m.w) - (m.u2 + m.v2 + m.w2);
  m.E_bar = m.p_ln / (g.gamma - 1.0) + 0.5 * m.rho_ln * m.u2bar;
  m.beta2bar = 2.0 * m.beta * m.beta - m.beta2;
  return m;
}

InterfaceMeans interface_means(const Cons &qL, const Cons &qR, const GasModel &g) {
  return interface_means(cons_to_prim(qL, g), cons_to_prim(qR, g), g);
}

} // namespace esmhd
