#include "esmhd/reconstruction.hpp"

#include <cmath>
#include <stdexcept>

namespace esmhd {

double minmod(double a, double b) {
  if (a * b > 0.0) return (std::fabs(a) < std::fabs(b)) ? a : b;
  return 0.0;
}

void reconstruct(std::span<const Prim> cells, int n_interior,
                 const ReconstructionScheme &scheme, double dx,
                 std::vector<InterfacePair> &out) {
  constexpr int ng = 2;
  if (static_cast<int>(cells.size()) < n_interior + 2 * ng)
    throw std::invalid_argument("reconstruct: pencil needs 2 ghost cells per side");

  out.resize(static_cast<std::size_t>(n_interior) + 1);

  if (scheme.kind == ReconKind::Constant) {
    for (int k = 0; k <= n_interior; ++k) {
      out[k].left = cells[ng + k - 1];
      out[k].right = cells[ng + k];
    }
    return;
  }

  // slope of cell c (pencil index), componentwise on primitives
  auto slope = [&](int c, int comp) {
    const double ql = cells[c - 1].to_vec()[comp];
    const double q0 = cells[c].to_vec()[comp];
    const double qr = cells[c + 1].to_vec()[comp];
    const double dl = (q0 - ql) / dx, dr = (qr - q0) / dx;
    if (scheme.kind == ReconKind::Minmod) return minmod(dl, dr);
    return scheme.alpha * dl + (1.0 - scheme.alpha) * dr;
  };

  // face values of every cell that borders an interior interface
  std::vector<Vec8> face_lo(static_cast<std::size_t>(n_interior) + 2);
  std::vector<Vec8> face_hi(static_cast<std::size_t>(n_interior) + 2);
  for (int k = -1; k <= n_interior; ++k) {
    const int c = ng + k;
    const Vec8 q = cells[c].to_vec();
    for (int comp = 0; comp < 8; ++comp) {
      const double s = 0.5 * dx * slope(c, comp);
      face_lo[k + 1][comp] = q[comp] - s;
      face_hi[k + 1][comp] = q[comp] + s;
    }
  }
  for (int k = 0; k <= n_interior; ++k) {
    out[k].left = Prim::from_vec(face_hi[k]);      // cell k-1, upper face
    out[k].right = Prim::from_vec(face_lo[k + 1]); // cell k, lower face
  }
}

} // namespace esmhd
