#include "esmhd/dissipation.hpp"

#include <cmath>

namespace esmhd {

DissipationAverages dissipation_averages(const InterfaceMeans &m, MeanPolicy policy) {
  DissipationAverages d;
  d.gamma = m.gamma;
  d.u = m.u;
  d.v = m.v;
  d.w = m.w;
  d.B1 = m.B1;
  d.B2 = m.B2;
  d.B3 = m.B3;
  d.rho_alfven = m.rho;

  if (policy == MeanPolicy::EntropyScaled) {
    d.rho = m.rho_ln;
    d.u2bar = m.u2bar;
    d.beta = m.beta;
    d.p_tilde = m.p_tilde;
    d.p_ln = m.p_ln;
    d.tau = m.tau;
    d.a_bar2 = m.gamma * m.p_tilde / m.rho_ln;
    d.a_ln2 = m.gamma * m.p_ln / m.rho_ln;
    d.a_beta2 = 0.5 * m.gamma / m.beta;
    d.a_hat2 = m.gamma * m.p * m.inv_rho;
    d.bhat2_1 = m.B1 * m.B1_rho;
    d.bhat2_2 = m.B2 * m.B2_rho;
    d.bhat2_3 = m.B3 * m.B3_rho;
  } else {
    // every quantity evaluated pointwise at the arithmetic-mean primitives
    const double a2 = m.gamma * m.p / m.rho;
    d.rho = m.rho;
    d.u2bar = m.u * m.u + m.v * m.v + m.w * m.w;
    d.beta = 0.5 * m.rho / m.p;
    d.p_tilde = m.p;
    d.p_ln = m.p;
    d.tau = m.p / m.rho;
    d.a_bar2 = a2;
    d.a_ln2 = a2;
    d.a_beta2 = a2;
    d.a_hat2 = a2;
    d.bhat2_1 = m.B1 * m.B1 / m.rho;
    d.bhat2_2 = m.B2 * m.B2 / m.rho;
    d.bhat2_3 = m.B3 * m.B3 / m.rho;
  }
  return d;
}

Mat8 discrete_entropy_jacobian(const DissipationAverages &d) {
  const double g1 = d.gamma - 1.0;
  const double E_bar = d.p_ln / g1 + 0.5 * d.rho * d.u2bar;
  const double vel2 = d.u * d.u + d.v * d.v + d.w * d.w;
  const double H55 = (d.p_ln * d.p_ln / g1 + E_bar * E_bar) / d.rho +
                     d.p_tilde * vel2 +
                     d.tau * (d.B1 * d.B1 + d.B2 * d.B2 + d.B3 * d.B3);

  Mat8 H;
  H(0, 0) = d.rho;
  H(0, 1) = d.rho * d.u;
  H(0, 2) = d.rho * d.v;
  H(0, 3) = d.rho * d.w;
  H(0, 4) = E_bar;

  H(1, 1) = d.rho * d.u * d.u + d.p_tilde;
  H(1, 2) = d.rho * d.u * d.v;
  H(1, 3) = d.rho * d.u * d.w;
  H(1, 4) = (E_bar + d.p_tilde) * d.u;

  H(2, 2) = d.rho * d.v * d.v + d.p_tilde;
  H(2, 3) = d.rho * d.v * d.w;
  H(2, 4) = (E_bar + d.p_tilde) * d.v;

  H(3, 3) = d.rho * d.w * d.w + d.p_tilde;
  H(3, 4) = (E_bar + d.p_tilde) * d.w;

  H(4, 4) = H55;
  H(4, 5) = d.tau * d.B1;
  H(4, 6) = d.tau * d.B2;
  H(4, 7) = d.tau * d.B3;

  H(5, 5) = d.tau;
  H(6, 6) = d.tau;
  H(7, 7) = d.tau;

  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < i; ++j) H(i, j) = H(j, i);
  return H;
}

Mat8 discrete_entropy_jacobian(const InterfaceMeans &m) {
  return discrete_entropy_jacobian(
      dissipation_averages(m, MeanPolicy::EntropyScaled));
}

// Fast/slow speeds and the Roe-Balsara alphas, evaluated without
// cancellation.  With A = a^2, C = b1^2, P = bperp^2 and D = b^2 - a^2 the
// discriminant is Delta^2 = D^2 + 4AP, so
//   cf^2 = (A + C + P + Delta)/2,   cs^2 = A C / cf^2,
//   alpha_f^2 = (Delta - D)/(2 Delta),  alpha_s^2 = (Delta + D)/(2 Delta),
// where (Delta -+ D) is expanded through 4AP/(Delta +- D) when it is the
// small difference.  This keeps alpha_f^2 + alpha_s^2 = 1 and
// alpha_f^2 cf^2 + alpha_s^2 cs^2 = a^2 at machine precision through the
// triple degeneracy cf -> cs.
struct FastSlowAlpha {
  double cf2, cs2, alpha_f, alpha_s;
};

static FastSlowAlpha fast_slow_alpha(double A, double C, double P) {
  FastSlowAlpha r;
  const double D = (C + P) - A;
  const double cross = 2.0 * std::sqrt(std::max(A * P, 0.0));
  const double delta = std::hypot(D, cross);

  r.cf2 = 0.5 * ((A + C + P) + delta);
  r.cs2 = (r.cf2 > 0.0) ? A * C / r.cf2 : 0.0;

  if (delta == 0.0) {
    // triple umbilic: bperp = 0 and a = |b1|
    r.alpha_f = r.alpha_s = M_SQRT1_2;
    return r;
  }
  double af2, as2;
  if (D >= 0.0) {
    af2 = (A * P > 0.0) ? 2.0 * A * P / (delta * (delta + D)) : 0.0;
    as2 = (delta + D) / (2.0 * delta);
  } else {
    af2 = (delta - D) / (2.0 * delta);
    as2 = (A * P > 0.0) ? 2.0 * A * P / (delta * (delta - D)) : 0.0;
  }
  r.alpha_f = std::sqrt(std::min(std::max(af2, 0.0), 1.0));
  r.alpha_s = std::sqrt(std::min(std::max(as2, 0.0), 1.0));
  return r;
}

EigenSystem eigensystem(const DissipationAverages &d) {
  EigenSystem es;
  const double g = d.gamma, g1 = g - 1.0;
  const double rho = d.rho;
  const double sqrt_rho = std::sqrt(rho);

  es.a_bar = std::sqrt(d.a_bar2);
  es.a_ln = std::sqrt(d.a_ln2);
  es.a_beta = std::sqrt(d.a_beta2);

  es.bbar1 = d.B1 / sqrt_rho;
  es.bbar2 = d.B2 / sqrt_rho;
  es.bbar3 = d.B3 / sqrt_rho;
  es.bbar_perp = std::hypot(es.bbar2, es.bbar3);
  es.sigma_b1 = (es.bbar1 >= 0.0) ? 1.0 : -1.0;

  if (es.bbar_perp == 0.0) {
    es.beta2_bar = M_SQRT1_2;
    es.beta3_bar = M_SQRT1_2;
  } else {
    es.beta2_bar = es.bbar2 / es.bbar_perp;
    es.beta3_bar = es.bbar3 / es.bbar_perp;
  }

  const FastSlowAlpha fsa = fast_slow_alpha(
      d.a_bar2, es.bbar1 * es.bbar1, es.bbar_perp * es.bbar_perp);
  es.c_f_hat = std::sqrt(fsa.cf2);
  es.c_s_hat = std::sqrt(std::max(fsa.cs2, 0.0));
  es.c_a_hat = std::fabs(es.bbar1);
  es.alpha_f = fsa.alpha_f;
  es.alpha_s = fsa.alpha_s;

  const double af = es.alpha_f, as = es.alpha_s;
  const double cf = es.c_f_hat, cs = es.c_s_hat;
  const double b2 = es.beta2_bar, b3 = es.beta3_bar;
  const double sgn = es.sigma_b1;
  const double vperp = d.v * b2 + d.w * b3;

  const double common_f =
      0.5 * af * rho * d.u2bar + es.a_beta * as * rho * es.bbar_perp +
      af * rho * d.a_ln2 / g1;
  const double common_s =
      0.5 * as * rho * d.u2bar - es.a_beta * af * rho * es.bbar_perp +
      as * rho * d.a_ln2 / g1;

  es.psi_pf = common_f + af * cf * rho * d.u - as * cs * rho * sgn * vperp;
  es.psi_mf = common_f - af * cf * rho * d.u + as * cs * rho * sgn * vperp;
  es.psi_ps = common_s + as * cs * rho * d.u + af * cf * rho * sgn * vperp;
  es.psi_ms = common_s - as * cs * rho * d.u - af * cf * rho * sgn * vperp;

  // columns: 0:+f 1:+a 2:+s 3:E 4:D 5:-s 6:-a 7:-f
  Mat8 &R = es.R;
  const double ra = rho * std::sqrt(d.rho_alfven); // rho^ln sqrt(<rho>)

  // fast pair
  auto fill_fast = [&](int col, double pm) {
    R(0, col) = af * rho;
    R(1, col) = af * rho * (d.u + pm * cf);
    R(2, col) = rho * (af * d.v - pm * as * cs * b2 * sgn);
    R(3, col) = rho * (af * d.w - pm * as * cs * b3 * sgn);
    R(4, col) = (pm > 0) ? es.psi_pf : es.psi_mf;
    R(5, col) = 0.0;
    R(6, col) = as * es.a_beta * b2 * sqrt_rho;
    R(7, col) = as * es.a_beta * b3 * sqrt_rho;
  };
  auto fill_slow = [&](int col, double pm) {
    R(0, col) = as * rho;
    R(1, col) = as * rho * (d.u + pm * cs);
    R(2, col) = rho * (as * d.v + pm * af * cf * b2 * sgn);
    R(3, col) = rho * (as * d.w + pm * af * cf * b3 * sgn);
    R(4, col) = (pm > 0) ? es.psi_ps : es.psi_ms;
    R(5, col) = 0.0;
    R(6, col) = -af * es.a_beta * b2 * sqrt_rho;
    R(7, col) = -af * es.a_beta * b3 * sqrt_rho;
  };
  auto fill_alfven = [&](int col, double pm) {
    R(0, col) = 0.0;
    R(1, col) = 0.0;
    R(2, col) = pm * ra * b3;
    R(3, col) = -pm * ra * b2;
    R(4, col) = -pm * ra * (b2 * d.w - b3 * d.v);
    R(5, col) = 0.0;
    R(6, col) = -rho * b3;
    R(7, col) = rho * b2;
  };

  fill_fast(0, +1.0);
  fill_alfven(1, +1.0);
  fill_slow(2, +1.0);

  // entropy wave
  R(0, 3) = 1.0;
  R(1, 3) = d.u;
  R(2, 3) = d.v;
  R(3, 3) = d.w;
  R(4, 3) = 0.5 * d.u2bar;
  R(5, 3) = R(6, 3) = R(7, 3) = 0.0;

  // divergence wave
  R(0, 4) = R(1, 4) = R(2, 4) = R(3, 4) = 0.0;
  R(4, 4) = d.B1;
  R(5, 4) = 1.0;
  R(6, 4) = R(7, 4) = 0.0;

  fill_slow(5, -1.0);
  fill_alfven(6, -1.0);
  fill_fast(7, -1.0);

  const double z_fs = 1.0 / (2.0 * g * rho);
  const double z_a = 1.0 / (4.0 * d.beta * rho * rho);
  es.Z = {z_fs, z_a, z_fs, rho * g1 / g, 0.5 / d.beta, z_fs, z_a, z_fs};

  // eigenvalues from the double-hatted wave speeds
  const double inner = std::sqrt(std::max(d.a_hat2 * d.bhat2_1, 0.0));
  const double bhat2 = d.bhat2_1 + d.bhat2_2 + d.bhat2_3;
  const double rp = std::max(d.a_hat2 + bhat2 + 2.0 * inner, 0.0);
  const double rm = std::max(d.a_hat2 + bhat2 - 2.0 * inner, 0.0);
  es.c_f_dhat = 0.5 * (std::sqrt(rp) + std::sqrt(rm));
  es.c_s_dhat = std::max(0.5 * (std::sqrt(rp) - std::sqrt(rm)), 0.0);
  es.c_a_dhat = std::sqrt(std::max(d.bhat2_1, 0.0));

  es.lambda = {d.u + es.c_f_dhat, d.u + es.c_a_dhat, d.u + es.c_s_dhat,
               d.u,               d.u,               d.u - es.c_s_dhat,
               d.u - es.c_a_dhat, d.u - es.c_f_dhat};
  return es;
}

EigenSystem eigensystem(const InterfaceMeans &m, const GasModel &g) {
  (void)g;
  return eigensystem(dissipation_averages(m, MeanPolicy::EntropyScaled));
}

static Vec8 dissipation_term(const InterfaceMeans &m, MeanPolicy policy) {
  const EigenSystem es = eigensystem(dissipation_averages(m, policy));

  // y = R^T [[v]], scaled by |Lambda| Z, then mapped back through R
  Vec8 y{};
  for (int k = 0; k < 8; ++k) {
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += es.R(i, k) * m.j_entropy_vars[i];
    y[k] = s * std::fabs(es.lambda[k]) * es.Z[k];
  }
  Vec8 diss{};
  for (int i = 0; i < 8; ++i) {
    double s = 0.0;
    for (int k = 0; k < 8; ++k) s += es.R(i, k) * y[k];
    diss[i] = s;
  }
  return diss;
}

Vec8 kepes_flux(const InterfaceMeans &m, MeanPolicy policy) {
  const Vec8 ec = kepec_flux(m);
  const Vec8 diss = dissipation_term(m, policy);
  Vec8 f;
  for (int i = 0; i < 8; ++i) f[i] = ec[i] - 0.5 * diss[i];
  return f;
}

Vec8 kepes_flux(const Prim &wL, const Prim &wR, const GasModel &g) {
  return kepes_flux(interface_means(wL, wR, g), MeanPolicy::EntropyScaled);
}

Vec8 kepes_flux(const Cons &qL, const Cons &qR, const GasModel &g) {
  return kepes_flux(interface_means(qL, qR, g), MeanPolicy::EntropyScaled);
}

Vec8 kepes_flux_naive(const Prim &wL, const Prim &wR, const GasModel &g) {
  return kepes_flux(interface_means(wL, wR, g), MeanPolicy::Naive);
}

Vec8 kepes_flux_naive(const Cons &qL, const Cons &qR, const GasModel &g) {
  return kepes_flux(interface_means(qL, qR, g), MeanPolicy::Naive);
}

double entropy_dissipation_rate(const InterfaceMeans &m, MeanPolicy policy) {
  const EigenSystem es = eigensystem(dissipation_averages(m, policy));
  double rate = 0.0;
  for (int k = 0; k < 8; ++k) {
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += es.R(i, k) * m.j_entropy_vars[i];
    rate += std::fabs(es.lambda[k]) * es.Z[k] * s * s;
  }
  return -0.5 * rate;
}

double entropy_dissipation_rate(const Cons &qL, const Cons &qR, const GasModel &g) {
  return entropy_dissipation_rate(interface_means(qL, qR, g),
                                  MeanPolicy::EntropyScaled);
}

} // namespace esmhd
