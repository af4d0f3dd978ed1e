#include "ecsldg/sldg.hpp"

#include <algorithm>
#include <cmath>

#include "ecsldg/error.hpp"

namespace ecsldg {

ShiftDecomposition decompose_shift(double s, const Mesh1D& mesh) {
  if (!std::isfinite(s)) throw InputError("decompose_shift: non-finite shift");
  const double w = mesh.width();
  const double cells = std::floor(s / w);
  if (std::abs(cells) > 1e15) throw InputError("decompose_shift: shift spans too many cells");
  ShiftDecomposition d;
  d.whole_cells = static_cast<long>(cells);
  d.frac = s - cells * w;
  const double snap = 1e-14 * w;
  if (d.frac < snap) {
    d.frac = 0.0;
  } else if (d.frac > w - snap) {
    d.whole_cells += 1;
    d.frac = 0.0;
  }
  return d;
}

namespace {

// out = (2a+1)/2 * int_{lo}^{hi} P_b(xi) P_a(xi + offset) dxi, row a, column b.
void overlap_matrix(int k, double lo, double hi, double offset, std::vector<double>& out) {
  const int n = k + 1;
  const QuadratureRule& rule = gauss_rule(k);
  out.assign(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> pb(n), pa(n);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  for (int g = 0; g < n; ++g) {
    const double xi = mid + half * rule.nodes[g];
    legendre::values(xi, pb);
    legendre::values(xi + offset, pa);
    const double w = rule.weights[g] * half;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) out[a * n + b] += w * pa[a] * pb[b];
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out[a * n + b] *= 0.5 * (2 * a + 1);
  }
}

// nodal = to_nodal * modal * to_modal
std::vector<double> conjugate_to_nodal(int k, const std::vector<double>& modal) {
  const int n = k + 1;
  const CellBasis& basis = cell_basis(k);
  std::vector<double> tmp(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
  for (int a = 0; a < n; ++a) {
    for (int r = 0; r < n; ++r) {
      double s = 0.0;
      for (int b = 0; b < n; ++b) s += modal[a * n + b] * basis.to_modal[b * n + r];
      tmp[a * n + r] = s;
    }
  }
  for (int q = 0; q < n; ++q) {
    for (int r = 0; r < n; ++r) {
      double s = 0.0;
      for (int a = 0; a < n; ++a) s += basis.to_nodal[q * n + a] * tmp[a * n + r];
      out[q * n + r] = s;
    }
  }
  return out;
}

// Each source node must hand on exactly its own quadrature mass:
//   sum_q w_q (near + far)[q][r] = w_r.
// Rounding in the construction leaves a bias of a few ulp that does not
// average out over many identical steps, so the defect is pushed back into
// the entries in extended precision.
void rebalance_mass(int k, std::vector<double>& near, std::vector<double>& far) {
  const int n = k + 1;
  const auto& w = gauss_rule(k).weights;
  for (int r = 0; r < n; ++r) {
    long double sum = 0.0L;
    long double mag = 0.0L;
    for (int q = 0; q < n; ++q) {
      sum += static_cast<long double>(w[q]) * near[q * n + r] + static_cast<long double>(w[q]) * far[q * n + r];
      mag += static_cast<long double>(w[q]) * (std::abs(near[q * n + r]) + std::abs(far[q * n + r]));
    }
    if (mag == 0.0L) continue;
    const long double scale = (static_cast<long double>(w[r]) - sum) / mag;
    for (int q = 0; q < n; ++q) {
      near[q * n + r] = static_cast<double>(near[q * n + r] + scale * std::abs(near[q * n + r]));
      far[q * n + r] = static_cast<double>(far[q * n + r] + scale * std::abs(far[q * n + r]));
    }
  }
}

inline long wrap(long idx, long n) {
  long r = idx % n;
  return r < 0 ? r + n : r;
}

}  // namespace

ShiftKernel::ShiftKernel(int k, const Mesh1D& mesh, double shift)
    : k_(k), decomposition_(decompose_shift(shift, mesh)) {
  if (pure_translation()) return;
  const double phi = decomposition_.frac / mesh.width();
  // Upstream piece inside cell j-m: xi in [-1, 1-2phi], lands at xi + 2phi.
  overlap_matrix(k, -1.0, 1.0 - 2.0 * phi, 2.0 * phi, modal_near_);
  // Upstream piece inside cell j-m-1: xi in [1-2phi, 1], lands at xi - 2 + 2phi.
  overlap_matrix(k, 1.0 - 2.0 * phi, 1.0, 2.0 * phi - 2.0, modal_far_);
  nodal_near_ = conjugate_to_nodal(k, modal_near_);
  nodal_far_ = conjugate_to_nodal(k, modal_far_);
  rebalance_mass(k, nodal_near_, nodal_far_);
}

namespace {

void apply_line(const std::vector<double>& near, const std::vector<double>& far, long m,
                bool pure, Boundary boundary, int n_cells, int n, std::span<const double> in,
                std::span<double> out) {
  const long nc = n_cells;
  const bool periodic = boundary == Boundary::periodic;
  for (long j = 0; j < nc; ++j) {
    double* o = out.data() + j * n;
    long src_near = j - m;
    long src_far = j - m - 1;
    bool has_near = true;
    bool has_far = !pure;
    if (periodic) {
      src_near = wrap(src_near, nc);
      src_far = wrap(src_far, nc);
    } else {
      has_near = src_near >= 0 && src_near < nc;
      has_far = has_far && src_far >= 0 && src_far < nc;
    }
    if (pure) {
      if (has_near) {
        std::copy_n(in.data() + src_near * n, n, o);
      } else {
        std::fill_n(o, n, 0.0);
      }
      continue;
    }
    std::fill_n(o, n, 0.0);
    if (has_near) {
      const double* u = in.data() + src_near * n;
      for (int a = 0; a < n; ++a) {
        double s = 0.0;
        for (int b = 0; b < n; ++b) s += near[a * n + b] * u[b];
        o[a] += s;
      }
    }
    if (has_far) {
      const double* u = in.data() + src_far * n;
      for (int a = 0; a < n; ++a) {
        double s = 0.0;
        for (int b = 0; b < n; ++b) s += far[a * n + b] * u[b];
        o[a] += s;
      }
    }
  }
}

}  // namespace

void advect_nodal_line(const ShiftKernel& kernel, Boundary boundary, int n_cells,
                       std::span<const double> in, std::span<double> out) {
  apply_line(kernel.nodal_near(), kernel.nodal_far(), kernel.whole_cells(),
             kernel.pure_translation(), boundary, n_cells, kernel.degree() + 1, in, out);
}

DGFunction1D advect_const(const DGFunction1D& u, double shift) {
  const ShiftKernel kernel(u.degree(), u.mesh(), shift);
  DGFunction1D out(u.mesh(), u.degree());
  apply_line(kernel.modal_near(), kernel.modal_far(), kernel.whole_cells(),
             kernel.pure_translation(), u.mesh().boundary(), u.mesh().n_cells(), u.n_local(),
             u.coeffs(), out.coeffs());
  return out;
}

}  // namespace ecsldg
