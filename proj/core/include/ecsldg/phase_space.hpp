#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ecsldg/dg.hpp"

namespace ecsldg {

/// Nodal Q^k field on the tensor grid of x and v Gauss points.
///
/// Storage order is ascending (i, p, j, q): x cell, x node, v cell, v node.
/// A fixed (i, p) is a contiguous v-line; a fixed (j, q) is an x-line with
/// stride `x_stride()`. The first and last v cells hold zeros.
class PhaseSpaceField {
public:
  PhaseSpaceField(Mesh1D mesh_x, Mesh1D mesh_v, int k);

  const Mesh1D& mesh_x() const { return mesh_x_; }
  const Mesh1D& mesh_v() const { return mesh_v_; }
  int degree() const { return k_; }
  int n_local() const { return k_ + 1; }
  int nx_nodes() const { return mesh_x_.n_cells() * n_local(); }
  int nv_nodes() const { return mesh_v_.n_cells() * n_local(); }
  std::size_t x_stride() const { return static_cast<std::size_t>(nv_nodes()); }

  std::size_t index(int i, int p, int j, int q) const {
    return (static_cast<std::size_t>(i * n_local() + p) * mesh_v_.n_cells() + j) * n_local() + q;
  }
  double& at(int i, int p, int j, int q) { return values_[index(i, p, j, q)]; }
  double at(int i, int p, int j, int q) const { return values_[index(i, p, j, q)]; }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  /// x-line at velocity node (j, q) as a DG function over mesh_x.
  DGFunction1D x_line(int j, int q) const;
  void set_x_line(int j, int q, const DGFunction1D& line);

  /// v-line at spatial node (i, p) as a DG function over mesh_v.
  DGFunction1D v_line(int i, int p) const;
  void set_v_line(int i, int p, const DGFunction1D& line);

  /// Largest |f| in the first and last v cells.
  double v_boundary_max_abs() const;
  void zero_v_boundary();

  /// f(x, v) -> f(x, -v); the v mesh must be symmetric about zero.
  void reflect_velocity();

private:
  Mesh1D mesh_x_;
  Mesh1D mesh_v_;
  int k_;
  std::vector<double> values_;
};

using PhaseFunction = std::function<double(double, double)>;

/// Tensor-product L2 projection of fn onto Q^k, stored at the Gauss nodes.
/// Integrals use a (quad_order+1)^2 Gauss rule per cell.
PhaseSpaceField project_phase_space(const PhaseFunction& fn, const Mesh1D& mesh_x,
                                    const Mesh1D& mesh_v, int k,
                                    int quad_order = max_rule_order);

/// Physical quadrature weights (reference weight * width/2) of every node of
/// a mesh, cell-major.
std::vector<double> node_weights(const Mesh1D& mesh, int k);

/// Physical coordinates of every node of a mesh, cell-major.
std::vector<double> node_coordinates(const Mesh1D& mesh, int k);

}  // namespace ecsldg
