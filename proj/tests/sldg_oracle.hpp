#pragma once

// Brute-force semi-Lagrangian DG update: for each target cell I_j and
// Legendre mode a, integrate u(y) P_a(ref_j(y + s)) over I_j - s, split at
// the old cell interfaces, with a 200-point Gauss rule per piece.

#include <algorithm>
#include <cmath>
#include <vector>

#include "ecsldg/dg.hpp"
#include "oracle.hpp"

namespace oracle {

inline std::vector<double> sldg_brute_force(const ecsldg::DGFunction1D& u, double s) {
  const auto& mesh = u.mesh();
  const int k = u.degree();
  const int n = k + 1;
  const double h = mesh.width();
  const bool periodic = mesh.boundary() == ecsldg::Boundary::periodic;
  const double L = mesh.length();

  // Evaluate u at y, which lies strictly inside an old cell.
  const auto u_at = [&](double y) {
    if (periodic) {
      y = mesh.lo() + std::fmod(y - mesh.lo(), L);
      if (y < mesh.lo()) y += L;
    } else if (y < mesh.lo() || y > mesh.hi()) {
      return 0.0;
    }
    int c = static_cast<int>(std::floor((y - mesh.lo()) / h));
    c = std::clamp(c, 0, mesh.n_cells() - 1);
    return u.eval_local(c, 2.0 * (y - mesh.cell_lo(c)) / h - 1.0);
  };

  std::vector<double> out(static_cast<std::size_t>(mesh.n_cells()) * n, 0.0);
  for (int j = 0; j < mesh.n_cells(); ++j) {
    const double a0 = mesh.cell_lo(j) - s;
    const double b0 = mesh.cell_hi(j) - s;
    std::vector<double> cuts{a0};
    for (double c = mesh.lo() + std::ceil((a0 - mesh.lo()) / h) * h; c < b0; c += h) {
      if (c > a0) cuts.push_back(c);
    }
    cuts.push_back(b0);
    for (int a = 0; a < n; ++a) {
      double acc = 0.0;
      for (std::size_t m = 0; m + 1 < cuts.size(); ++m) {
        if (cuts[m + 1] - cuts[m] <= 0.0) continue;
        acc += gauss(
            [&](double y) {
              const double xi = 2.0 * (y + s - mesh.cell_lo(j)) / h - 1.0;
              return u_at(y) * legendre(a, xi);
            },
            cuts[m], cuts[m + 1]);
      }
      out[static_cast<std::size_t>(j) * n + a] = acc * (2 * a + 1) / h;
    }
  }
  return out;
}

}  // namespace oracle
