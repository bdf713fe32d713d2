#ifndef ESMHD_DISSIPATION_HPP_
#define ESMHD_DISSIPATION_HPP_

//! \file dissipation.hpp
//  \brief Entropy-scaled dissipation operator: discrete entropy Jacobian H,
//  right eigenvectors R, diagonal scaling Z, eigenvalues Lambda, and the
//  entropy stable (KEPES) flux.  A naive arithmetic-mean variant shares the
//  same builders through a mean-policy switch so robustness comparisons
//  isolate the averaging.

#include "esmhd/kepec.hpp"
#include "esmhd/means.hpp"
#include "esmhd/state.hpp"
#include "esmhd/types.hpp"

namespace esmhd {

enum class MeanPolicy {
  EntropyScaled, // the specific averages required by H = R Z R^T
  Naive,         // plain arithmetic mean of the primitive variables
};

// Scalar ingredient values the H/R/Z/Lambda builders consume.  Under the
// EntropyScaled policy these are the specific averages; under Naive every
// entry is the corresponding pointwise quantity evaluated at the arithmetic
// mean of the primitive variables.
struct DissipationAverages {
  double gamma;
  double rho;         // rho^ln | <rho>
  double u, v, w;     // <u>, <v>, <w>
  double u2bar;       // 2<u>^2-<u^2> summed | |<u>|^2
  double beta;        // <beta> | <rho>/(2<p>)
  double p_tilde;     // <rho>/(2<beta>) | <p>
  double p_ln;        // rho^ln/(2 beta^ln) | <p>
  double tau;         // 1/(2<beta>) both policies (p_tilde/<rho>)
  double B1, B2, B3;  // <B_i>
  double rho_alfven;  // <rho> (the sqrt(<rho>) factor of the Alfven columns)
  double a_bar2;      // gamma p_tilde / rho^ln | gamma <p>/<rho>
  double a_ln2;       // gamma p_ln / rho^ln    | gamma <p>/<rho>
  double a_beta2;     // gamma/(2<beta>)        | gamma <p>/<rho>
  // eigenvalue-specific averages
  double a_hat2;            // gamma <p><1/rho> | gamma <p>/<rho>
  double bhat2_1, bhat2_2, bhat2_3; // <B_i><B_i/rho> | <B_i>^2/<rho>
};

DissipationAverages dissipation_averages(const InterfaceMeans &m, MeanPolicy policy);

// Discrete entropy Jacobian; symmetric and s.p.d. on admissible means.
// Satisfies (H [[v]])_i = [[q]]_i exactly for every component but the total
// energy, where the relation holds asymptotically.
Mat8 discrete_entropy_jacobian(const DissipationAverages &d);
Mat8 discrete_entropy_jacobian(const InterfaceMeans &m);

// Discrete eigendecomposition of the 8-wave dissipation operator, with the
// scaling relation H = R Z R^T.  Column order (+f, +a, +s, E, D, -s, -a, -f);
// eigenvalues are permuted to match.
struct EigenSystem {
  Mat8 R;
  Vec8 Z;      // positive diagonal
  Vec8 lambda; // ordered as the columns of R

  // convenience values used to assemble R/Z (hatted speeds from the
  // eigenvector averaging, double-hatted speeds from the eigenvalue one)
  double c_a_hat, c_f_hat, c_s_hat; // from a_bar2 / <B>/sqrt(rho^ln)
  double c_a_dhat, c_f_dhat, c_s_dhat;
  double a_bar, a_ln, a_beta;
  double bbar1, bbar2, bbar3, bbar_perp;
  double beta2_bar, beta3_bar; // b_perp-normalized components (Roe-Balsara)
  double alpha_f, alpha_s;
  double psi_pf, psi_mf, psi_ps, psi_ms;
  double sigma_b1;
};

EigenSystem eigensystem(const DissipationAverages &d);
EigenSystem eigensystem(const InterfaceMeans &m, const GasModel &g);

// KEPEC minus 1/2 R |Lambda| Z R^T [[v]].
Vec8 kepes_flux(const Cons &qL, const Cons &qR, const GasModel &g);
Vec8 kepes_flux(const Prim &wL, const Prim &wR, const GasModel &g);
Vec8 kepes_flux(const InterfaceMeans &m, MeanPolicy policy);

// Same structure with every mean replaced by the plain arithmetic mean;
// intentionally fragile, kept for the robustness comparison.
Vec8 kepes_flux_naive(const Cons &qL, const Cons &qR, const GasModel &g);
Vec8 kepes_flux_naive(const Prim &wL, const Prim &wR, const GasModel &g);

// -1/2 [[v]]^T R |Lambda| Z R^T [[v]]  (always <= 0; the interface entropy
// production rate of the KEPES flux).
double entropy_dissipation_rate(const Cons &qL, const Cons &qR, const GasModel &g);
double entropy_dissipation_rate(const InterfaceMeans &m, MeanPolicy policy);

} // namespace esmhd

#endif // ESMHD_DISSIPATION_HPP_
