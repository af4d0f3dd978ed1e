#include "ecsldg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ecsldg/error.hpp"

namespace ecsldg {

DiagRecord observe(const SimState& state) {
  const PhaseSpaceField& f = state.f;
  const int k = f.degree();
  const auto wx = node_weights(f.mesh_x(), k);
  const auto wv = node_weights(f.mesh_v(), k);
  const auto v = node_coordinates(f.mesh_v(), k);
  const int nx = f.nx_nodes();
  const int nv = f.nv_nodes();
  const auto& vals = f.values();

  DiagRecord d;
  d.t = state.t;
  d.min_f = std::numeric_limits<double>::infinity();
  std::vector<double> n(nx);
  for (int r = 0; r < nx; ++r) {
    const double* line = vals.data() + static_cast<std::size_t>(r) * nv;
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, sq = 0.0;
    for (int c = 0; c < nv; ++c) {
      const double m = wv[c] * line[c];
      s0 += m;
      s1 += m * v[c];
      s2 += m * v[c] * v[c];
      sq += m * line[c];
      d.min_f = std::min(d.min_f, line[c]);
    }
    n[r] = s0;
    d.L1 += wx[r] * s0;
    d.P += wx[r] * s1;
    d.E_K += wx[r] * s2;
    d.l2_f += wx[r] * sq;
  }
  d.E_K *= 0.5;

  const double lam = state.field.lambda;
  const auto E = state.field.E.nodal_values();
  for (int r = 0; r < nx; ++r) d.E_E += wx[r] * E[r] * E[r];
  d.E_E *= 0.5 * lam * lam;
  d.E_total = d.E_E + d.E_K;

  const auto n_dg = DGFunction1D::from_nodal(f.mesh_x(), k, n);
  d.gauss_res = gauss_residual(state.field.E, n_dg, lam, state.ion_density);
  return d;
}

ErrorNorms error_norms(const PhaseSpaceField& f_num, const PhaseSpaceField& f_ref) {
  if (!(f_num.mesh_x() == f_ref.mesh_x()) || !(f_num.mesh_v() == f_ref.mesh_v()) ||
      f_num.degree() != f_ref.degree()) {
    throw InputError("error_norms: fields live on different meshes");
  }
  const int k = f_num.degree();
  const auto wx = node_weights(f_num.mesh_x(), k);
  const auto wv = node_weights(f_num.mesh_v(), k);
  const int nv = f_num.nv_nodes();
  const auto& a = f_num.values();
  const auto& b = f_ref.values();
  ErrorNorms e;
  for (int r = 0; r < f_num.nx_nodes(); ++r) {
    double s1 = 0.0, s2 = 0.0;
    for (int c = 0; c < nv; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * nv + c;
      const double d = a[idx] - b[idx];
      s1 += wv[c] * std::abs(d);
      s2 += wv[c] * d * d;
    }
    e.L1 += wx[r] * s1;
    e.L2 += wx[r] * s2;
  }
  e.L2 = std::sqrt(e.L2);
  return e;
}

double field_error(const DGFunction1D& E_num, const DGFunction1D& E_ref) {
  if (!(E_num.mesh() == E_ref.mesh()) || E_num.degree() != E_ref.degree()) {
    throw InputError("field_error: fields live on different meshes");
  }
  DGFunction1D d = E_num;
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) d.coeffs()[i] -= E_ref.coeffs()[i];
  return l2_norm(d);
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("least_squares_slope: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw InputError("least_squares_slope: degenerate abscissae");
  return sxy / sxx;
}

double fit_decay_rate(std::span<const double> t, std::span<const double> E_E) {
  if (t.size() != E_E.size()) throw InputError("fit_decay_rate: length mismatch");
  if (t.empty()) throw InputError("fit_decay_rate: empty series");
  const auto [lo, hi] = std::minmax_element(E_E.begin(), E_E.end());
  if (*lo == *hi) return 0.0;

  const std::size_t n = t.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(E_E[i] > 0.0)) throw InputError("fit_decay_rate: E_E must be positive");
    y[i] = 0.5 * std::log(E_E[i]);
  }
  constexpr std::size_t guard = 3;
  std::vector<double> pt, py;
  for (std::size_t i = guard; i + guard < n; ++i) {
    bool peak = true;
    for (std::size_t j = i - guard; j <= i + guard && peak; ++j) {
      if (j != i && !(y[i] > y[j])) peak = false;
    }
    if (!peak) continue;
    // Parabola through (t[i-1], t[i], t[i+1]).
    const double x0 = t[i - 1], x1 = t[i], x2 = t[i + 1];
    const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double c2 = (d12 - d01) / (x2 - x0);
    double tp = x1, yp = y1;
    if (c2 < 0.0) {
      const double c1 = d01 - c2 * (x0 + x1);
      const double c0 = y0 - c1 * x0 - c2 * x0 * x0;
      const double cand = -c1 / (2.0 * c2);
      if (cand > x0 && cand < x2) {
        tp = cand;
        yp = c0 + c1 * cand + c2 * cand * cand;
      }
    }
    pt.push_back(tp);
    py.push_back(yp);
  }
  if (pt.size() < 3) throw InputError("fit_decay_rate: fewer than 3 peaks in the series");
  return least_squares_slope(pt, py);
}

std::vector<std::optional<double>> convergence_order(std::span<const double> h,
                                                     std::span<const double> errors) {
  if (h.size() != errors.size() || h.size() < 2) {
    throw InputError("convergence_order: need >= 2 matching levels");
  }
  std::vector<std::optional<double>> out;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    const double e1 = errors[i], e2 = errors[i + 1];
    if (!(e1 > 0.0) || !(e2 > 0.0) || !std::isfinite(e1) || !std::isfinite(e2) || h[i] == h[i + 1]) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(std::log(e1 / e2) / std::log(h[i] / h[i + 1]));
    }
  }
  return out;
}

double theil_sen_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("theil_sen_slope: need >= 2 points");
  std::vector<double> slopes;
  slopes.reserve(x.size() * (x.size() - 1) / 2);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[j] != x[i]) slopes.push_back((y[j] - y[i]) / (x[j] - x[i]));
    }
  }
  if (slopes.empty()) throw InputError("theil_sen_slope: degenerate abscissae");
  const std::size_t mid = slopes.size() / 2;
  std::nth_element(slopes.begin(), slopes.begin() + mid, slopes.end());
  double med = slopes[mid];
  if (slopes.size() % 2 == 0) {
    const double below = *std::max_element(slopes.begin(), slopes.begin() + mid);
    med = 0.5 * (med + below);
  }
  return med;
}

}  // namespace ecsldg
