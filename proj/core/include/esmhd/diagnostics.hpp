#ifndef ESMHD_DIAGNOSTICS_HPP_
#define ESMHD_DIAGNOSTICS_HPP_

//! \file diagnostics.hpp
//  \brief Conservation sums, entropy budget, divergence-of-B monitor,
//  Alfven-wave errors, and experimental order of convergence.

#include <span>
#include <string>
#include <vector>

#include "esmhd/grid.hpp"
#include "esmhd/state.hpp"

namespace esmhd {

// Deterministic pairwise-tree summation; reduction order is independent of
// the traversal chunking used elsewhere.
double pairwise_sum(std::span<const double> x);

struct ConservedTotals {
  double mass, momx, momy, momz, energy;
};

ConservedTotals conserved_totals(const Field &f, const Grid &g);

// Sum of S(q) dV over fluid cells, mathematical (decreasing) convention.
double total_entropy(const Field &f, const Grid &g, const GasModel &gas);

// Central-difference divergence estimate per fluid cell and its global max.
// Ghost layers must be filled.
struct DivBEstimate {
  std::vector<double> cell; // interior-sized, x-fastest; 0 on solid cells
  double max_abs;
};
DivBEstimate div_b_estimate(const Field &f, const Grid &g);

enum class ErrorNorm { L1, L2 };

// Error of B2 against the circularly polarized Alfven-wave profile advected
// by one unit per time unit: L1 = sum |e| dV, L2 = sqrt(sum e^2 dV).
double alfven_error(const Field &f, const Grid &g, const GasModel &gas, double t,
                    ErrorNorm norm);

// log2(e_k / e_{k+1}) for a resolution-doubling error sequence.
std::vector<double> eoc(std::span<const double> errors);

struct DiagnosticsRow {
  double t, dt;
  double mass, momx, momy, momz, energy;
  double entropy, entropy_err;
  double div_b_max;
  double rho_min, p_min;
};

struct RunDiagnostics {
  std::vector<DiagnosticsRow> rows;

  static const char *csv_header(); // "t,dt,mass,..."
  void write_csv(const std::string &path) const;
};

DiagnosticsRow sample_diagnostics(const Field &f, const Grid &g,
                                  const GasModel &gas, double t, double dt,
                                  double entropy0);

} // namespace esmhd

#endif // ESMHD_DIAGNOSTICS_HPP_
