#ifndef ESMHD_KEPEC_HPP_
#define ESMHD_KEPEC_HPP_

//! \file kepec.hpp
//  \brief Kinetic-energy-preserving, entropy-conservative two-point flux and
//  the matching interface discretization of the Janhunen source term.

#include "esmhd/means.hpp"
#include "esmhd/state.hpp"
#include "esmhd/types.hpp"

namespace esmhd {

// Entropy- and kinetic-energy-conservative interface flux.  The sixth
// component is identically zero.
Vec8 kepec_flux(const InterfaceMeans &m);
Vec8 kepec_flux(const Cons &qL, const Cons &qR, const GasModel &g);
Vec8 kepec_flux(const Prim &wL, const Prim &wR, const GasModel &g);

// Interface contribution of the Janhunen source term.  Components 1-5 are
// zero; 6-8 are -[[B1]] <u_i><beta><B_i>/<dx beta B_i> with a consistent
// fallback 1/<dx> for the ratio when the denominator degenerates.
//
// With the default (unbounded) amp_cap this is the exactly
// entropy-conserving discretization.  A finite amp_cap additionally falls
// back whenever the ratio exceeds amp_cap/<dx>, trading exact entropy
// cancellation at such interfaces for a bounded source; the solver runs
// with kSourceAmpCap (see solver.hpp).
inline constexpr double kUncappedSource = 1.0e300;
Vec8 janhunen_source_interface(const InterfaceMeans &m, double dxL, double dxR,
                               double amp_cap = kUncappedSource);
Vec8 janhunen_source_interface(const Cons &qL, const Cons &qR, double dxL,
                               double dxR, const GasModel &g);

// Residual of the discrete entropy conserving condition
//   [[v]]^T fhat - [[v.f]] + <dx v>^T s + [[F]],
// which vanishes (to roundoff) for the KEPEC flux with the source above.
double ec_condition_residual(const Cons &qL, const Cons &qR, double dxL,
                             double dxR, const GasModel &g);
double ec_condition_residual_for_flux(const Prim &wL, const Prim &wR,
                                      double dxL, double dxR, const GasModel &g,
                                      const Vec8 &fhat);

// Magnitude of the terms entering the entropy-conservation residual; the
// natural scale against which the residual is judged.
double ec_condition_scale(const Prim &wL, const Prim &wR, double dxL,
                          double dxR, const GasModel &g, const Vec8 &fhat);

} // namespace esmhd

#endif // ESMHD_KEPEC_HPP_
