#pragma once

#include <span>
#include <vector>

#include "ecsldg/dg.hpp"

namespace ecsldg {

/// Upstream displacement s written as whole_cells * width + frac.
struct ShiftDecomposition {
  long whole_cells = 0;
  double frac = 0.0;  // in [0, width)
};

/// floor convention; a remainder within 1e-14 * width of 0 or width snaps to a
/// pure cell shift.
ShiftDecomposition decompose_shift(double s, const Mesh1D& mesh);

/// Local operators of the constant-coefficient semi-Lagrangian DG update.
///
/// For a shift s = m*width + frac, the new solution on cell j collects two
/// upstream pieces: the right part of cell j-m (weights `from_near`) and the
/// left part of cell j-m-1 (weights `from_far`). Each operator is exact: the
/// integrand is a product of two degree-k polynomials.
class ShiftKernel {
public:
  ShiftKernel(int k, const Mesh1D& mesh, double shift);

  int degree() const { return k_; }
  long whole_cells() const { return decomposition_.whole_cells; }
  double frac() const { return decomposition_.frac; }
  bool pure_translation() const { return decomposition_.frac == 0.0; }

  /// (k+1)x(k+1) row-major; modal -> modal.
  const std::vector<double>& modal_near() const { return modal_near_; }
  const std::vector<double>& modal_far() const { return modal_far_; }
  /// Same operators acting on nodal values at the Gauss points.
  const std::vector<double>& nodal_near() const { return nodal_near_; }
  const std::vector<double>& nodal_far() const { return nodal_far_; }

private:
  int k_;
  ShiftDecomposition decomposition_;
  std::vector<double> modal_near_;
  std::vector<double> modal_far_;
  std::vector<double> nodal_near_;
  std::vector<double> nodal_far_;
};

/// Applies the nodal operators of `kernel` to one contiguous line of
/// n_cells*(k+1) nodal values. `in` and `out` must not alias.
void advect_nodal_line(const ShiftKernel& kernel, Boundary boundary, int n_cells,
                       std::span<const double> in, std::span<double> out);

/// Semi-Lagrangian DG update for u_t + a u_x = 0 with constant a, where
/// shift = a*dt: for every cell I_j and test function Psi in the space,
///   int_{I_j} u_new Psi = int_{I_j - shift} u(y) Psi(y + shift) dy.
/// Any finite shift is accepted, including negative and multi-cell ones.
DGFunction1D advect_const(const DGFunction1D& u, double shift);

}  // namespace ecsldg
