#ifndef ESMHD_MEANS_HPP_
#define ESMHD_MEANS_HPP_

//! \file means.hpp
//  \brief Two-state averaging kernels shared by the interface flux, the
//  interface source term, and the dissipation operator.

#include "esmhd/state.hpp"
#include "esmhd/types.hpp"

namespace esmhd {

// Numerically stable logarithmic mean (a-b)/(ln a - ln b), a,b > 0.
// Series branch follows Ismail & Roe, App. B.
double log_mean(double a, double b);

// Residuals of the two linear jump identities
//   [[ab]] - (<a>[[b]] + <b>[[a]])   and   [[a^2]] - 2<a>[[a]].
// Zero in exact arithmetic for any two-state pairs.
struct JumpResiduals {
  double product;
  double square;
};
JumpResiduals jump_properties_check(double aL, double aR, double bL, double bR);

// Every two-state average consumed by the KEPEC flux, the Janhunen source,
// and the entropy-scaled dissipation operator.  Computed once per interface.
// Jumps are R - L; <.> is the arithmetic mean.
struct InterfaceMeans {
  Prim L, R;
  double gamma;

  // jumps of primitives and beta
  double j_rho, j_u, j_v, j_w, j_p, j_beta, j_B1, j_B2, j_B3;
  Vec8 j_entropy_vars; // [[v]]

  // arithmetic means of primitives
  double rho, u, v, w, p, beta, B1, B2, B3;

  // arithmetic means of products
  double u2, v2, w2;           // <u^2>, ...
  double B1B1, B2B2, B3B3;     // <B_i^2>
  double B1B2, B1B3;           // <B1 B2>, <B1 B3>
  double uB1B1, uB2B2, uB3B3;  // <u B_i^2>
  double vB1B2, wB1B3;         // <v B1 B2>, <w B1 B3>
  double betaB1, betaB2, betaB3;
  double beta2;                // <beta^2>
  double inv_rho;              // <1/rho>
  double B1_rho, B2_rho, B3_rho; // <B_i/rho>

  // logarithmic means
  double rho_ln, beta_ln;

  // derived composites
  double p_ln;     // rho_ln / (2 beta_ln)
  double p_tilde;  // <rho>/(2<beta>)
  double tau;      // 1/(2<beta>) = p_tilde/<rho>
  double u2bar;    // 2(<u>^2+<v>^2+<w>^2) - (<u^2>+<v^2>+<w^2>) = uL.uR
  double E_bar;    // p_ln/(gamma-1) + rho_ln*u2bar/2
  double beta2bar; // 2<beta>^2 - <beta^2>
};

InterfaceMeans interface_means(const Prim &wL, const Prim &wR, const GasModel &g);
InterfaceMeans interface_means(const Cons &qL, const Cons &qR, const GasModel &g);

} // namespace esmhd

#endif // ESMHD_MEANS_HPP_
