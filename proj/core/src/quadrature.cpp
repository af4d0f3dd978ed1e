#include "ecsldg/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ecsldg/error.hpp"

namespace ecsldg {

Mesh1D::Mesh1D(double lo, double hi, int n_cells, Boundary boundary)
    : lo_(lo), hi_(hi), n_cells_(n_cells), width_(0.0), boundary_(boundary) {
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw InputError("Mesh1D: need finite lo < hi");
  }
  if (n_cells < 1) {
    throw InputError("Mesh1D: n_cells must be positive");
  }
  width_ = (hi - lo) / n_cells;
}

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int j = 2; j <= n; ++j) {
    const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule make_gauss_rule(int k) {
  if (k < 0 || k > max_rule_order) {
    throw InputError("make_gauss_rule: degree " + std::to_string(k) +
                     " outside supported range [0, " + std::to_string(max_rule_order) + "]");
  }
  const int n = k + 1;
  QuadratureRule rule;
  rule.order = k;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      auto [p, d] = legendre_with_derivative(n, x);
      dp = d;
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    dp = legendre_with_derivative(n, x).second;
    // store ascending
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  // symmetrize to kill round-off asymmetry
  for (int i = 0; i < n / 2; ++i) {
    const double a = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[n - 1 - i]);
    rule.nodes[i] = -a;
    rule.nodes[n - 1 - i] = a;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

const QuadratureRule& gauss_rule(int k) {
  static const std::array<QuadratureRule, max_rule_order + 1> rules = [] {
    std::array<QuadratureRule, max_rule_order + 1> r;
    for (int i = 0; i <= max_rule_order; ++i) r[i] = make_gauss_rule(i);
    return r;
  }();
  if (k < 0 || k > max_rule_order) {
    throw InputError("gauss_rule: degree " + std::to_string(k) + " unsupported");
  }
  return rules[k];
}

double global_node(const Mesh1D& mesh, int cell, int q, const QuadratureRule& rule) {
  if (cell < 0 || cell >= mesh.n_cells() || q < 0 || q >= rule.size()) {
    throw InputError("global_node: index out of range");
  }
  return mesh.cell_lo(cell) + 0.5 * mesh.width() * (rule.nodes[q] + 1.0);
}

namespace legendre {

void values(double x, std::span<double> out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = x;
  for (std::size_t j = 2; j < out.size(); ++j) {
    const double jj = static_cast<double>(j);
    out[j] = ((2 * jj - 1) * x * out[j - 1] - (jj - 1) * out[j - 2]) / jj;
  }
}

void derivatives(double x, std::span<double> out) {
  // P'_{j} = P'_{j-2} + (2j-1) P_{j-1}
  if (out.empty()) return;
  std::vector<double> p(out.size());
  values(x, p);
  out[0] = 0.0;
  if (out.size() == 1) return;
  out[1] = 1.0;
  for (std::size_t j = 2; j < out.size(); ++j) {
    out[j] = out[j - 2] + (2.0 * j - 1.0) * p[j - 1];
  }
}

double value(int a, double x) {
  double p0 = 1.0;
  if (a == 0) return p0;
  double p1 = x;
  for (int j = 2; j <= a; ++j) {
    const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace legendre

}  // namespace ecsldg
