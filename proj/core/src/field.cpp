#include "ecsldg/field.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "ecsldg/error.hpp"

namespace ecsldg {

void compute_moments_nodal(const PhaseSpaceField& f, std::span<double> n, std::span<double> J) {
  const auto wv = node_weights(f.mesh_v(), f.degree());
  const auto v = node_coordinates(f.mesh_v(), f.degree());
  const int nv = f.nv_nodes();
  const auto& vals = f.values();
  for (int r = 0; r < f.nx_nodes(); ++r) {
    const double* line = vals.data() + r * f.x_stride();
    double sn = 0.0;
    double sj = 0.0;
    for (int c = 0; c < nv; ++c) {
      const double m = wv[c] * line[c];
      sn += m;
      sj += m * v[c];
    }
    n[r] = sn;
    J[r] = -sj;
  }
}

Moments compute_moments(const PhaseSpaceField& f) {
  std::vector<double> n(f.nx_nodes()), J(f.nx_nodes());
  compute_moments_nodal(f, n, J);
  return {DGFunction1D::from_nodal(f.mesh_x(), f.degree(), n),
          DGFunction1D::from_nodal(f.mesh_x(), f.degree(), J)};
}

void ampere_ec_nodal(std::span<const double> E, std::span<const double> n,
                     std::span<const double> J, double lambda, double dt, std::span<double> E_new) {
  const double l2 = lambda * lambda;
  for (std::size_t r = 0; r < E.size(); ++r) {
    const double theta = 0.25 * dt * dt * n[r];
    const double denom = l2 + theta;
    if (!(denom > 0.0)) {
      throw SolverError("ampere_update_ec: lambda^2 + theta <= 0 at x node " + std::to_string(r) +
                        " (negative density)");
    }
    E_new[r] = ((l2 - theta) * E[r] - dt * J[r]) / denom;
  }
}

void ampere_explicit_nodal(std::span<const double> E, std::span<const double> J, double lambda,
                           double dt, std::span<double> E_new) {
  const double l2 = lambda * lambda;
  for (std::size_t r = 0; r < E.size(); ++r) E_new[r] = E[r] - dt * J[r] / l2;
}

namespace {

void check_same_space(const DGFunction1D& a, const DGFunction1D& b, const char* what) {
  if (!(a.mesh() == b.mesh()) || a.degree() != b.degree()) {
    throw InputError(std::string(what) + ": field and moments live on different spaces");
  }
}

}  // namespace

FieldState ampere_update_ec(const FieldState& field, const Moments& moments, double dt) {
  check_same_space(field.E, moments.n, "ampere_update_ec");
  check_same_space(field.E, moments.J, "ampere_update_ec");
  const auto E = field.E.nodal_values();
  const auto n = moments.n.nodal_values();
  const auto J = moments.J.nodal_values();
  std::vector<double> out(E.size());
  ampere_ec_nodal(E, n, J, field.lambda, dt, out);
  return {DGFunction1D::from_nodal(field.E.mesh(), field.E.degree(), out), field.lambda};
}

FieldState ampere_update_explicit(const FieldState& field, const Moments& moments, double dt) {
  check_same_space(field.E, moments.J, "ampere_update_explicit");
  const auto E = field.E.nodal_values();
  const auto J = moments.J.nodal_values();
  std::vector<double> out(E.size());
  ampere_explicit_nodal(E, J, field.lambda, dt, out);
  return {DGFunction1D::from_nodal(field.E.mesh(), field.E.degree(), out), field.lambda};
}

// ---------------------------------------------------------------------------
// LDG Poisson

struct PoissonLDG::Impl {
  Impl(const Mesh1D& m, int degree, double lam) : mesh(m), k(degree), lambda(lam) {}
  Mesh1D mesh;
  int k;
  double lambda;
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
};

PoissonLDG::PoissonLDG(const Mesh1D& mesh, int k, double lambda)
    : impl_(std::make_unique<Impl>(mesh, k, lambda)) {
  if (mesh.boundary() != Boundary::periodic) {
    throw InputError("PoissonLDG: only periodic meshes are supported");
  }
  if (!(lambda > 0.0)) throw InputError("PoissonLDG: lambda must be positive");
  const int n = k + 1;
  const int N = mesh.n_cells();
  const int nphi = N * n;
  const int size = 2 * nphi + 1;
  const double h = mesh.width();
  const double l2 = lambda * lambda;

  auto phi = [&](int i, int a) { return ((i % N + N) % N) * n + a; };
  auto q = [&](int i, int a) { return nphi + ((i % N + N) % N) * n + a; };
  auto sgn = [](int a) { return (a % 2 == 0) ? 1.0 : -1.0; };
  // D[a][b] = int P_b P_a'
  auto D = [](int a, int b) { return (b < a && (a + b) % 2 == 1) ? 2.0 : 0.0; };

  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(N) * n * (4 * n + 2) + nphi);
  for (int i = 0; i < N; ++i) {
    for (int a = 0; a < n; ++a) {
      // int q psi + int phi psi' - phi^-_{i+1/2} psi(1) + phi^-_{i-1/2} psi(-1) = 0
      const int r1 = phi(i, a);
      t.emplace_back(r1, q(i, a), h / (2 * a + 1));
      for (int b = 0; b < n; ++b) {
        const double d = D(a, b);
        if (d != 0.0) t.emplace_back(r1, phi(i, b), d);
        t.emplace_back(r1, phi(i, b), -1.0);
        t.emplace_back(r1, phi(i - 1, b), sgn(a));
      }
      // lambda^2 (int q w' - q^+_{i+1/2} w(1) + q^+_{i-1/2} w(-1)) - mu int w = int rho w
      const int r2 = q(i, a);
      for (int b = 0; b < n; ++b) {
        const double d = D(a, b);
        if (d != 0.0) t.emplace_back(r2, q(i, b), l2 * d);
        t.emplace_back(r2, q(i + 1, b), -l2 * sgn(b));
        t.emplace_back(r2, q(i, b), l2 * sgn(a) * sgn(b));
      }
      if (a == 0) t.emplace_back(r2, 2 * nphi, -h);
    }
    t.emplace_back(2 * nphi, phi(i, 0), h);
  }
  Eigen::SparseMatrix<double> A(size, size);
  A.setFromTriplets(t.begin(), t.end());
  A.makeCompressed();
  impl_->lu.compute(A);
  if (impl_->lu.info() != Eigen::Success) {
    throw SolverError("PoissonLDG: singular LDG system (" + impl_->lu.lastErrorMessage() + ")");
  }
}

PoissonLDG::~PoissonLDG() = default;
PoissonLDG::PoissonLDG(PoissonLDG&&) noexcept = default;
PoissonLDG& PoissonLDG::operator=(PoissonLDG&&) noexcept = default;

const Mesh1D& PoissonLDG::mesh() const { return impl_->mesh; }
int PoissonLDG::degree() const { return impl_->k; }
double PoissonLDG::lambda() const { return impl_->lambda; }

DGFunction1D PoissonLDG::solve(const DGFunction1D& rho, double scale) const {
  const Mesh1D& mesh = impl_->mesh;
  const int k = impl_->k;
  if (!(rho.mesh() == mesh) || rho.degree() != k) {
    throw InputError("PoissonLDG::solve: source lives on a different space");
  }
  const double net = integrate(rho);
  if (std::abs(net) > 1e-10 * std::max(1.0, std::abs(scale))) {
    throw InputError("poisson_ldg: charge neutrality violated (net charge " + std::to_string(net) + ")");
  }
  const int n = k + 1;
  const int N = mesh.n_cells();
  const int nphi = N * n;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(2 * nphi + 1);
  for (int i = 0; i < N; ++i) {
    const auto c = rho.cell(i);
    for (int a = 0; a < n; ++a) b[nphi + i * n + a] = mesh.width() / (2 * a + 1) * c[a];
  }
  const Eigen::VectorXd x = impl_->lu.solve(b);
  if (impl_->lu.info() != Eigen::Success || !x.allFinite()) {
    throw SolverError("PoissonLDG::solve: back-substitution failed");
  }
  DGFunction1D E(mesh, k);
  for (int r = 0; r < nphi; ++r) E.coeffs()[r] = -x[nphi + r];
  return E;
}

namespace {

const PoissonLDG& cached_solver(const Mesh1D& mesh, int k, double lambda) {
  using Key = std::tuple<double, double, int, int, double>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<PoissonLDG>> cache;
  const Key key{mesh.lo(), mesh.hi(), mesh.n_cells(), k, lambda};
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<PoissonLDG>(mesh, k, lambda)).first;
  }
  return *it->second;
}

}  // namespace

DGFunction1D poisson_ldg(const DGFunction1D& n, double lambda, double ion_density) {
  DGFunction1D rho(n.mesh(), n.degree());
  for (std::size_t r = 0; r < rho.coeffs().size(); ++r) rho.coeffs()[r] = -n.coeffs()[r];
  for (int i = 0; i < n.mesh().n_cells(); ++i) rho.cell(i)[0] += ion_density;
  return cached_solver(n.mesh(), n.degree(), lambda).solve(rho, ion_density * n.mesh().length());
}

DGFunction1D poisson_ldg_source(const DGFunction1D& rho, double lambda) {
  double scale = 0.0;
  for (int i = 0; i < rho.mesh().n_cells(); ++i) scale += std::abs(rho.cell(i)[0]) * rho.mesh().width();
  return cached_solver(rho.mesh(), rho.degree(), lambda).solve(rho, scale);
}

double gauss_residual(const DGFunction1D& E, const DGFunction1D& n, double lambda,
                      double ion_density) {
  if (!(E.mesh() == n.mesh()) || E.degree() != n.degree()) {
    throw InputError("gauss_residual: E and n live on different spaces");
  }
  DGFunction1D r = cell_derivative(E);
  const double l2 = lambda * lambda;
  for (std::size_t m = 0; m < r.coeffs().size(); ++m) r.coeffs()[m] = l2 * r.coeffs()[m] + n.coeffs()[m];
  for (int i = 0; i < r.mesh().n_cells(); ++i) r.cell(i)[0] -= ion_density;
  return l2_norm(r);
}

}  // namespace ecsldg
