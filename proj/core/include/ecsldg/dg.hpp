#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ecsldg/quadrature.hpp"

namespace ecsldg {

/// Per-degree tables linking modal Legendre coefficients with nodal values at
/// the k+1 Gauss points of a cell. Both maps are (k+1)x(k+1), row-major.
struct CellBasis {
  int k = 0;
  QuadratureRule rule;
  std::vector<double> to_nodal;  // [q][a] = P_a(xi_q)
  std::vector<double> to_modal;  // [a][q] = (2a+1)/2 w_q P_a(xi_q)

  int n() const { return k + 1; }
};

const CellBasis& cell_basis(int k);

/// Piecewise polynomial of degree k, stored as modal Legendre coefficients per
/// cell (n_cells x (k+1), cell-major).
class DGFunction1D {
public:
  DGFunction1D(Mesh1D mesh, int k);
  DGFunction1D(Mesh1D mesh, int k, std::vector<double> coeffs);

  const Mesh1D& mesh() const { return mesh_; }
  int degree() const { return k_; }
  int n_local() const { return k_ + 1; }

  std::span<double> cell(int i) { return {coeffs_.data() + i * n_local(), static_cast<std::size_t>(n_local())}; }
  std::span<const double> cell(int i) const {
    return {coeffs_.data() + i * n_local(), static_cast<std::size_t>(n_local())};
  }
  std::vector<double>& coeffs() { return coeffs_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Evaluate cell i at reference coordinate xi in [-1, 1].
  double eval_local(int i, double xi) const;

  /// Values at the k+1 Gauss nodes of every cell, cell-major.
  std::vector<double> nodal_values() const;

  static DGFunction1D from_nodal(const Mesh1D& mesh, int k, std::span<const double> nodal);

private:
  Mesh1D mesh_;
  int k_;
  std::vector<double> coeffs_;
};

using PointFunction = std::function<double(double)>;

/// Cell-wise L2 projection. `quad_order` selects the Gauss rule used for the
/// integrals; the default (9 points) is exact for polynomials of degree <= 17.
DGFunction1D project(const PointFunction& fn, const Mesh1D& mesh, int k,
                     int quad_order = max_rule_order);

/// Point evaluation. Interfaces belong to the right cell; periodic meshes wrap;
/// zero_exterior meshes return 0 outside [lo, hi).
double eval(const DGFunction1D& u, double x);

double integrate(const DGFunction1D& u);

/// Integral of u(x) x^p over the domain, p in {0, 1, 2}.
double integrate_moment(const DGFunction1D& u, int p);

/// Exact per-cell derivative, embedded back into degree k (top mode zero).
DGFunction1D cell_derivative(const DGFunction1D& u);

/// Broken L2 inner product and norm under the degree-k Gauss rule.
double inner_product(const DGFunction1D& a, const DGFunction1D& b);
double l2_norm(const DGFunction1D& u);

}  // namespace ecsldg
