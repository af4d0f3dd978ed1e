#include "ecsldg/phase_space.hpp"

#include <algorithm>
#include <cmath>

#include "ecsldg/error.hpp"

namespace ecsldg {

PhaseSpaceField::PhaseSpaceField(Mesh1D mesh_x, Mesh1D mesh_v, int k)
    : mesh_x_(mesh_x), mesh_v_(mesh_v), k_(k) {
  if (k < 0 || k > max_rule_order) throw InputError("PhaseSpaceField: unsupported degree");
  if (mesh_v.n_cells() < 3) throw InputError("PhaseSpaceField: need at least 3 velocity cells");
  values_.assign(static_cast<std::size_t>(nx_nodes()) * nv_nodes(), 0.0);
}

DGFunction1D PhaseSpaceField::x_line(int j, int q) const {
  std::vector<double> nodal(nx_nodes());
  const std::size_t base = index(0, 0, j, q);
  for (int r = 0; r < nx_nodes(); ++r) nodal[r] = values_[base + r * x_stride()];
  return DGFunction1D::from_nodal(mesh_x_, k_, nodal);
}

void PhaseSpaceField::set_x_line(int j, int q, const DGFunction1D& line) {
  if (!(line.mesh() == mesh_x_) || line.degree() != k_) throw InputError("set_x_line: mesh mismatch");
  const auto nodal = line.nodal_values();
  const std::size_t base = index(0, 0, j, q);
  for (int r = 0; r < nx_nodes(); ++r) values_[base + r * x_stride()] = nodal[r];
}

DGFunction1D PhaseSpaceField::v_line(int i, int p) const {
  const std::size_t base = index(i, p, 0, 0);
  return DGFunction1D::from_nodal(
      mesh_v_, k_, std::span<const double>(values_.data() + base, static_cast<std::size_t>(nv_nodes())));
}

void PhaseSpaceField::set_v_line(int i, int p, const DGFunction1D& line) {
  if (!(line.mesh() == mesh_v_) || line.degree() != k_) throw InputError("set_v_line: mesh mismatch");
  const auto nodal = line.nodal_values();
  std::copy(nodal.begin(), nodal.end(), values_.begin() + static_cast<std::ptrdiff_t>(index(i, p, 0, 0)));
}

double PhaseSpaceField::v_boundary_max_abs() const {
  const int n = n_local();
  const int last = mesh_v_.n_cells() - 1;
  double m = 0.0;
  for (int r = 0; r < nx_nodes(); ++r) {
    const double* line = values_.data() + r * x_stride();
    for (int q = 0; q < n; ++q) {
      m = std::max(m, std::abs(line[q]));
      m = std::max(m, std::abs(line[last * n + q]));
    }
  }
  return m;
}

void PhaseSpaceField::zero_v_boundary() {
  const int n = n_local();
  const int last = mesh_v_.n_cells() - 1;
  for (int r = 0; r < nx_nodes(); ++r) {
    double* line = values_.data() + r * x_stride();
    for (int q = 0; q < n; ++q) {
      line[q] = 0.0;
      line[last * n + q] = 0.0;
    }
  }
}

void PhaseSpaceField::reflect_velocity() {
  if (std::abs(mesh_v_.lo() + mesh_v_.hi()) > 1e-12 * mesh_v_.length()) {
    throw InputError("reflect_velocity: velocity mesh is not symmetric about zero");
  }
  // Gauss nodes are symmetric, so node (j, q) maps onto (Nv-1-j, k-q): the
  // whole v-line is reversed.
  const int nv = nv_nodes();
  for (int r = 0; r < nx_nodes(); ++r) {
    double* line = values_.data() + r * x_stride();
    std::reverse(line, line + nv);
  }
}

PhaseSpaceField project_phase_space(const PhaseFunction& fn, const Mesh1D& mesh_x,
                                    const Mesh1D& mesh_v, int k, int quad_order) {
  PhaseSpaceField f(mesh_x, mesh_v, k);
  const QuadratureRule& rule = gauss_rule(std::max(quad_order, k));
  const CellBasis& basis = cell_basis(k);
  const int n = k + 1;
  const int g = rule.size();

  // P_a at the fine quadrature points
  std::vector<double> pg(static_cast<std::size_t>(g) * n);
  for (int t = 0; t < g; ++t) legendre::values(rule.nodes[t], std::span<double>(pg.data() + t * n, n));

  std::vector<double> samples(static_cast<std::size_t>(g) * g);
  std::vector<double> half(static_cast<std::size_t>(n) * g);
  std::vector<double> modal(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < mesh_x.n_cells(); ++i) {
    for (int j = 0; j < mesh_v.n_cells(); ++j) {
      for (int tx = 0; tx < g; ++tx) {
        const double x = mesh_x.cell_lo(i) + 0.5 * mesh_x.width() * (rule.nodes[tx] + 1.0);
        for (int tv = 0; tv < g; ++tv) {
          const double v = mesh_v.cell_lo(j) + 0.5 * mesh_v.width() * (rule.nodes[tv] + 1.0);
          samples[tx * g + tv] = fn(x, v);
        }
      }
      // contract over v first, then x
      for (int b = 0; b < n; ++b) {
        for (int tx = 0; tx < g; ++tx) {
          double s = 0.0;
          for (int tv = 0; tv < g; ++tv) s += rule.weights[tv] * pg[tv * n + b] * samples[tx * g + tv];
          half[b * g + tx] = s * 0.5 * (2 * b + 1);
        }
      }
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          double s = 0.0;
          for (int tx = 0; tx < g; ++tx) s += rule.weights[tx] * pg[tx * n + a] * half[b * g + tx];
          modal[a * n + b] = s * 0.5 * (2 * a + 1);
        }
      }
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          double s = 0.0;
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
              s += basis.to_nodal[p * n + a] * basis.to_nodal[q * n + b] * modal[a * n + b];
            }
          }
          f.at(i, p, j, q) = s;
        }
      }
    }
  }
  return f;
}

std::vector<double> node_weights(const Mesh1D& mesh, int k) {
  const QuadratureRule& rule = gauss_rule(k);
  std::vector<double> w(static_cast<std::size_t>(mesh.n_cells()) * (k + 1));
  for (int i = 0; i < mesh.n_cells(); ++i) {
    for (int q = 0; q <= k; ++q) w[i * (k + 1) + q] = 0.5 * mesh.width() * rule.weights[q];
  }
  return w;
}

std::vector<double> node_coordinates(const Mesh1D& mesh, int k) {
  const QuadratureRule& rule = gauss_rule(k);
  std::vector<double> x(static_cast<std::size_t>(mesh.n_cells()) * (k + 1));
  for (int i = 0; i < mesh.n_cells(); ++i) {
    for (int q = 0; q <= k; ++q) x[i * (k + 1) + q] = global_node(mesh, i, q, rule);
  }
  return x;
}

}  // namespace ecsldg
