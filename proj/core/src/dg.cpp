#include "ecsldg/dg.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <string>

#include "ecsldg/error.hpp"

namespace ecsldg {

namespace {

CellBasis build_cell_basis(int k) {
  CellBasis b;
  b.k = k;
  b.rule = make_gauss_rule(k);
  const int n = k + 1;
  b.to_nodal.assign(n * n, 0.0);
  b.to_modal.assign(n * n, 0.0);
  std::vector<double> p(n);
  for (int q = 0; q < n; ++q) {
    legendre::values(b.rule.nodes[q], p);
    for (int a = 0; a < n; ++a) {
      b.to_nodal[q * n + a] = p[a];
      b.to_modal[a * n + q] = 0.5 * (2 * a + 1) * b.rule.weights[q] * p[a];
    }
  }
  return b;
}

}  // namespace

const CellBasis& cell_basis(int k) {
  static const std::array<CellBasis, max_rule_order + 1> bases = [] {
    std::array<CellBasis, max_rule_order + 1> out;
    for (int i = 0; i <= max_rule_order; ++i) out[i] = build_cell_basis(i);
    return out;
  }();
  if (k < 0 || k > max_rule_order) {
    throw InputError("cell_basis: degree " + std::to_string(k) + " unsupported");
  }
  return bases[k];
}

DGFunction1D::DGFunction1D(Mesh1D mesh, int k)
    : mesh_(mesh), k_(k), coeffs_(static_cast<std::size_t>(mesh.n_cells()) * (k + 1), 0.0) {
  if (k < 0 || k > max_rule_order) {
    throw InputError("DGFunction1D: degree " + std::to_string(k) + " unsupported");
  }
}

DGFunction1D::DGFunction1D(Mesh1D mesh, int k, std::vector<double> coeffs)
    : DGFunction1D(mesh, k) {
  if (coeffs.size() != coeffs_.size()) {
    throw InputError("DGFunction1D: coefficient count does not match mesh and degree");
  }
  coeffs_ = std::move(coeffs);
}

double DGFunction1D::eval_local(int i, double xi) const {
  // Clenshaw-free: small k, explicit recurrence.
  const auto c = cell(i);
  double p0 = 1.0;
  double sum = c[0];
  if (k_ == 0) return sum;
  double p1 = xi;
  sum += c[1] * p1;
  for (int j = 2; j <= k_; ++j) {
    const double p2 = ((2 * j - 1) * xi * p1 - (j - 1) * p0) / j;
    sum += c[j] * p2;
    p0 = p1;
    p1 = p2;
  }
  return sum;
}

std::vector<double> DGFunction1D::nodal_values() const {
  const auto& basis = cell_basis(k_);
  const int n = n_local();
  std::vector<double> out(coeffs_.size());
  for (int i = 0; i < mesh_.n_cells(); ++i) {
    const double* c = coeffs_.data() + i * n;
    for (int q = 0; q < n; ++q) {
      double s = 0.0;
      for (int a = 0; a < n; ++a) s += basis.to_nodal[q * n + a] * c[a];
      out[i * n + q] = s;
    }
  }
  return out;
}

DGFunction1D DGFunction1D::from_nodal(const Mesh1D& mesh, int k, std::span<const double> nodal) {
  DGFunction1D u(mesh, k);
  if (nodal.size() != u.coeffs_.size()) {
    throw InputError("DGFunction1D::from_nodal: size mismatch");
  }
  const auto& basis = cell_basis(k);
  const int n = k + 1;
  for (int i = 0; i < mesh.n_cells(); ++i) {
    const double* v = nodal.data() + i * n;
    for (int a = 0; a < n; ++a) {
      double s = 0.0;
      for (int q = 0; q < n; ++q) s += basis.to_modal[a * n + q] * v[q];
      u.coeffs_[i * n + a] = s;
    }
  }
  return u;
}

DGFunction1D project(const PointFunction& fn, const Mesh1D& mesh, int k, int quad_order) {
  DGFunction1D u(mesh, k);
  const QuadratureRule& rule = gauss_rule(std::max(quad_order, k));
  const int n = k + 1;
  std::vector<double> p(n);
  for (int i = 0; i < mesh.n_cells(); ++i) {
    auto c = u.cell(i);
    for (int g = 0; g < rule.size(); ++g) {
      const double xi = rule.nodes[g];
      const double x = mesh.cell_lo(i) + 0.5 * mesh.width() * (xi + 1.0);
      const double fx = fn(x);
      legendre::values(xi, p);
      for (int a = 0; a < n; ++a) c[a] += rule.weights[g] * fx * p[a];
    }
    for (int a = 0; a < n; ++a) c[a] *= 0.5 * (2 * a + 1);
  }
  return u;
}

double eval(const DGFunction1D& u, double x) {
  const Mesh1D& m = u.mesh();
  if (m.boundary() == Boundary::periodic) {
    const double L = m.length();
    x = m.lo() + std::fmod(x - m.lo(), L);
    if (x < m.lo()) x += L;
    if (x >= m.hi()) x -= L;
  } else if (x < m.lo() || x >= m.hi()) {
    return 0.0;
  }
  int i = static_cast<int>(std::floor((x - m.lo()) / m.width()));
  if (i < 0) i = 0;
  if (i >= m.n_cells()) i = m.n_cells() - 1;
  const double xi = 2.0 * (x - m.cell_lo(i)) / m.width() - 1.0;
  return u.eval_local(i, xi);
}

double integrate(const DGFunction1D& u) {
  double s = 0.0;
  for (int i = 0; i < u.mesh().n_cells(); ++i) s += u.cell(i)[0] * u.mesh().width();
  return s;
}

double integrate_moment(const DGFunction1D& u, int p) {
  if (p < 0 || p > 2) throw InputError("integrate_moment: power must be 0, 1 or 2");
  if (p == 0) return integrate(u);
  // x^p u has degree k + p <= 2k+1 for k >= 1; k = 0 needs one extra point.
  const QuadratureRule& rule = gauss_rule(std::min(u.degree() + 1, max_rule_order));
  const Mesh1D& m = u.mesh();
  double s = 0.0;
  for (int i = 0; i < m.n_cells(); ++i) {
    double cs = 0.0;
    for (int g = 0; g < rule.size(); ++g) {
      const double x = m.cell_lo(i) + 0.5 * m.width() * (rule.nodes[g] + 1.0);
      cs += rule.weights[g] * u.eval_local(i, rule.nodes[g]) * std::pow(x, p);
    }
    s += 0.5 * m.width() * cs;
  }
  return s;
}

DGFunction1D cell_derivative(const DGFunction1D& u) {
  DGFunction1D d(u.mesh(), u.degree());
  const int k = u.degree();
  const double scale = 2.0 / u.mesh().width();
  // d/dxi sum_b c_b P_b = sum_a d_a P_a with d_a = (2a+1) sum_{b>a, b-a odd} c_b
  for (int i = 0; i < u.mesh().n_cells(); ++i) {
    const auto c = u.cell(i);
    auto out = d.cell(i);
    for (int a = 0; a < k; ++a) {
      double s = 0.0;
      for (int b = a + 1; b <= k; b += 2) s += c[b];
      out[a] = (2 * a + 1) * s * scale;
    }
  }
  return d;
}

double inner_product(const DGFunction1D& a, const DGFunction1D& b) {
  if (!(a.mesh() == b.mesh()) || a.degree() != b.degree()) {
    throw InputError("inner_product: mesh or degree mismatch");
  }
  // Orthogonal modes: int P_a P_a = 2/(2a+1), times jacobian w/2.
  double s = 0.0;
  const int n = a.n_local();
  for (int i = 0; i < a.mesh().n_cells(); ++i) {
    const auto ca = a.cell(i);
    const auto cb = b.cell(i);
    double cs = 0.0;
    for (int m = 0; m < n; ++m) cs += ca[m] * cb[m] / (2 * m + 1);
    s += cs * a.mesh().width();
  }
  return s;
}

double l2_norm(const DGFunction1D& u) { return std::sqrt(inner_product(u, u)); }

}  // namespace ecsldg
