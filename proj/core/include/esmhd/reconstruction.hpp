#ifndef ESMHD_RECONSTRUCTION_HPP_
#define ESMHD_RECONSTRUCTION_HPP_

//! \file reconstruction.hpp
//  \brief Interface-value reconstruction on pencils of primitive variables:
//  piecewise constant, piecewise linear with a free slope weight, and
//  minmod-limited slopes.

#include <span>
#include <vector>

#include "esmhd/state.hpp"

namespace esmhd {

enum class ReconKind { Constant, Linear, Minmod };

struct ReconstructionScheme {
  ReconKind kind = ReconKind::Constant;
  double alpha = 0.5; // slope weight for Linear, in [0,1]
};

double minmod(double a, double b);

// Interface pair produced by reconstruction: `left` is the right-face value
// of the lower cell, `right` the left-face value of the upper cell.
struct InterfacePair {
  Prim left, right;
};

// Reconstructs interface pairs for a pencil of n interior cells.  `cells`
// holds n + 4 primitive states (two ghosts on each end); `out` receives
// n + 1 pairs, one per interior interface.  Throws std::invalid_argument if
// fewer than two ghost layers are supplied.
void reconstruct(std::span<const Prim> cells, int n_interior,
                 const ReconstructionScheme &scheme, double dx,
                 std::vector<InterfacePair> &out);

} // namespace esmhd

#endif // ESMHD_RECONSTRUCTION_HPP_
