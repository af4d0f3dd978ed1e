#pragma once

#include <span>
#include <vector>

namespace ecsldg {

enum class Boundary { periodic, zero_exterior };

/// Uniform partition of [lo, hi] into n_cells cells of equal width.
class Mesh1D {
public:
  Mesh1D(double lo, double hi, int n_cells, Boundary boundary);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double length() const { return hi_ - lo_; }
  int n_cells() const { return n_cells_; }
  double width() const { return width_; }
  Boundary boundary() const { return boundary_; }

  double cell_lo(int i) const { return lo_ + i * width_; }
  double cell_hi(int i) const { return lo_ + (i + 1) * width_; }
  double cell_center(int i) const { return lo_ + (i + 0.5) * width_; }

  bool operator==(const Mesh1D&) const = default;

private:
  double lo_;
  double hi_;
  int n_cells_;
  double width_;
  Boundary boundary_;
};

/// Gauss-Legendre rule with k+1 points on the reference interval [-1, 1].
struct QuadratureRule {
  int order = 0;  // polynomial degree k of the DG space it serves
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

inline constexpr int max_rule_order = 8;

/// Nodes ascending. Throws InputError unless 0 <= k <= max_rule_order.
QuadratureRule make_gauss_rule(int k);

/// Shared immutable rule; cached per k.
const QuadratureRule& gauss_rule(int k);

/// Physical coordinate of reference node q of `cell`.
double global_node(const Mesh1D& mesh, int cell, int q, const QuadratureRule& rule);

/// Legendre polynomials P_0..P_k on [-1, 1], unnormalized (P_a(1) = 1).
namespace legendre {

/// out[a] = P_a(x), a = 0..out.size()-1
void values(double x, std::span<double> out);

/// out[a] = P_a'(x)
void derivatives(double x, std::span<double> out);

double value(int a, double x);

/// Integral over [-1, 1] of P_a^2.
inline double norm2(int a) { return 2.0 / (2 * a + 1); }

}  // namespace legendre

}  // namespace ecsldg
