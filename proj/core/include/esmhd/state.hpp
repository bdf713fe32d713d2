#ifndef ESMHD_STATE_HPP_
#define ESMHD_STATE_HPP_

//! \file state.hpp
//  \brief Pointwise state representations for ideal MHD: ideal-gas closure,
//  physical flux, entropy quantities, and characteristic wave speeds.
//
// Conserved state q = (rho, rho*u, rho*v, rho*w, E, B1, B2, B3).
// Primitive state  w = (rho, u, v, w, p, B1, B2, B3).

#include <stdexcept>
#include <string>

#include "esmhd/types.hpp"

namespace esmhd {

struct GasModel {
  double gamma; // adiabatic index, > 1
};

struct Cons {
  double rho = 0.0;
  Vec3 mom;
  double E = 0.0;
  Vec3 B;

  Vec8 to_vec() const { return {rho, mom.x, mom.y, mom.z, E, B.x, B.y, B.z}; }
  static Cons from_vec(const Vec8 &v) {
    return {v[0], {v[1], v[2], v[3]}, v[4], {v[5], v[6], v[7]}};
  }
};

struct Prim {
  double rho = 0.0;
  Vec3 vel;
  double p = 0.0;
  Vec3 B;

  Vec8 to_vec() const { return {rho, vel.x, vel.y, vel.z, p, B.x, B.y, B.z}; }
  static Prim from_vec(const Vec8 &v) {
    return {v[0], {v[1], v[2], v[3]}, v[4], {v[5], v[6], v[7]}};
  }
};

struct EntropyVars {
  Vec8 v{};
};

// Thrown when the conservative-to-primitive inversion produces a vacuum or
// negative-pressure state, or when inputs are not finite.  The solver treats
// this as fatal: the offending cell (if known) is attached by the caller.
class UnphysicalState : public std::runtime_error {
public:
  enum class Kind { NonPositiveDensity, NonPositivePressure, NotFinite };

  UnphysicalState(Kind kind, double rho, double p)
      : std::runtime_error(describe(kind, rho, p)), kind_(kind), rho_(rho), p_(p) {}

  Kind kind() const { return kind_; }
  double rho() const { return rho_; }
  double p() const { return p_; }

  // Cell location, filled in by grid-level callers; -1 means unknown.
  int i = -1, j = -1, k = -1;

private:
  static std::string describe(Kind kind, double rho, double p);
  Kind kind_;
  double rho_, p_;
};

Cons prim_to_cons(const Prim &w, const GasModel &g);
Prim cons_to_prim(const Cons &q, const GasModel &g);

// x-direction physical flux of the ideal MHD system.
Vec8 physical_flux_x(const Cons &q, const GasModel &g);
Vec8 physical_flux_x(const Prim &w, const GasModel &g);

// Mathematical (decreasing) entropy convention: S = -rho*s/(gamma-1) with
// s = ln p - gamma ln rho.  F = u*S is the x-direction entropy flux and
// phi = v.f - F the x-direction entropy potential.
double entropy_density(const Prim &w, const GasModel &g);
double entropy_density(const Cons &q, const GasModel &g);
double entropy_flux_x(const Prim &w, const GasModel &g);
double entropy_potential_x(const Prim &w, const GasModel &g);

EntropyVars entropy_variables(const Prim &w, const GasModel &g);
EntropyVars entropy_variables(const Cons &q, const GasModel &g);

// Inverse temperature variable beta = rho/(2p).
inline double beta_of(const Prim &w) { return 0.5 * w.rho / w.p; }

struct WaveSpeeds {
  double c_a; // Alfven speed |b1|
  double c_s; // slow magnetoacoustic speed
  double c_f; // fast magnetoacoustic speed
  double a;   // sound speed sqrt(gamma p / rho)
};

// Characteristic speeds in the x-direction; 0 <= c_s <= c_a <= c_f holds with
// radicands clamped against roundoff.
WaveSpeeds wave_speeds_x(const Prim &w, const GasModel &g);

// Fast speed with the normal component b_n given explicitly (used for the
// CFL estimate in each sweep direction).
double fast_speed(double rho, double p, const Vec3 &B, double Bn, const GasModel &g);

} // namespace esmhd

#endif // ESMHD_STATE_HPP_
