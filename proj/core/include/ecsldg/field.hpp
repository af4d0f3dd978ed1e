#pragma once

#include <memory>
#include <span>
#include <vector>

#include "ecsldg/dg.hpp"
#include "ecsldg/phase_space.hpp"

namespace ecsldg {

/// Electric field over mesh_x and the (normalized) Debye length.
struct FieldState {
  DGFunction1D E;
  double lambda = 1.0;
};

/// Velocity moments of f at the x Gauss nodes, electron sign convention:
///   n = int f dv,  J = -int f v dv.
struct Moments {
  DGFunction1D n;
  DGFunction1D J;
};

/// Nodal moments (cell-major over x nodes). Sums run in ascending (j, q).
void compute_moments_nodal(const PhaseSpaceField& f, std::span<double> n, std::span<double> J);

Moments compute_moments(const PhaseSpaceField& f);

/// Energy-conserving implicit-midpoint Ampere update, in closed form per node:
///   E_new = ((lambda^2 - theta) E - dt J) / (lambda^2 + theta),
///   theta = dt^2 n / 4.
/// dt may be negative. Throws SolverError if lambda^2 + theta <= 0 anywhere.
FieldState ampere_update_ec(const FieldState& field, const Moments& moments, double dt);

/// Forward-Euler Ampere update E_new = E - (dt / lambda^2) J.
FieldState ampere_update_explicit(const FieldState& field, const Moments& moments, double dt);

/// Nodal kernels used by the stepper (all spans indexed by x node).
void ampere_ec_nodal(std::span<const double> E, std::span<const double> n,
                     std::span<const double> J, double lambda, double dt, std::span<double> E_new);
void ampere_explicit_nodal(std::span<const double> E, std::span<const double> J, double lambda,
                           double dt, std::span<double> E_new);

/// Periodic LDG solver for -lambda^2 phi'' = rho, returning E = -phi'.
///
/// Auxiliary variable q = phi'; alternating fluxes (phi-hat from the left,
/// q-hat from the right); the constant mode is fixed by int phi = 0 through a
/// bordering Lagrange multiplier. The sparse factorization is built once.
class PoissonLDG {
public:
  PoissonLDG(const Mesh1D& mesh, int k, double lambda);
  ~PoissonLDG();
  PoissonLDG(PoissonLDG&&) noexcept;
  PoissonLDG& operator=(PoissonLDG&&) noexcept;

  /// rho must integrate to zero within 1e-10 * max(1, scale); throws
  /// InputError otherwise.
  DGFunction1D solve(const DGFunction1D& rho, double scale = 1.0) const;

  const Mesh1D& mesh() const;
  int degree() const;
  double lambda() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// E from number density n against a uniform ion background `ion_density`:
/// rho = ion_density - n. Factorizations are cached per (mesh, k, lambda).
DGFunction1D poisson_ldg(const DGFunction1D& n, double lambda, double ion_density = 1.0);

/// Same solve with an explicit charge density.
DGFunction1D poisson_ldg_source(const DGFunction1D& rho, double lambda);

/// Broken L2 norm of lambda^2 dE/dx - (ion_density - n), using the per-cell
/// strong derivative only (interface jumps of E are not included).
double gauss_residual(const DGFunction1D& E, const DGFunction1D& n, double lambda,
                      double ion_density = 1.0);

}  // namespace ecsldg
