#include "lmm/validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "lmm/densities.hpp"
#include "lmm/errors.hpp"
#include "lmm/fourier_direct.hpp"
#include "lmm/lagrange_basis.hpp"
#include "lmm/models.hpp"
#include "lmm/operators.hpp"
#include "lmm/specfun.hpp"

namespace lmm::validation {

namespace {

struct CoulombRow {
  int n;
  double e1s, e2s, e1p;
};
// h = 0.5
constexpr std::array<CoulombRow, 4> kCoulombTable{{
    {50, -0.249960128, -0.062192468, -0.062606365},
    {100, -0.249989893, -0.062495421, -0.062501071},
    {200, -0.249997451, -0.062499681, -0.062500000},
    {300, -0.249998864, -0.062499858, -0.062500000},
}};

struct FulcherRow {
  int n;
  double e1s, e2s, e1p;
};
// h = 0.5, GeV
constexpr std::array<FulcherRow, 8> kFulcherTable{{
    {10, 0.690205, 1.499120, 1.217182},
    {20, 0.703199, 1.422610, 1.237518},
    {30, 0.702660, 1.414775, 1.240446},
    {40, 0.702642, 1.416084, 1.240220},
    {50, 0.702623, 1.415932, 1.240240},
    {60, 0.702614, 1.415927, 1.240238},
    {70, 0.702609, 1.415917, 1.240238},
    {80, 0.702605, 1.415911, 1.240238},
}};
constexpr std::array<double, 3> kFulcherReference{0.703, 1.416, 1.240};

struct GaussianRow {
  int n;
  GaussianObservables values;
};
// Present method at h = 0.4.
constexpr std::array<GaussianRow, 3> kGaussianPresent{{
    {10, {1.87082354, 1.3537145, 3.975794, 1.73873, -0.8366054}},
    {20, {1.87098731, 1.3554645, 3.992363, 1.73295, -0.8399416}},
    {50, {1.87098362, 1.3553805, 3.991568, 1.73374, -0.8397774}},
}};
// Direct Fourier route; these digits are reproduced at h = 0.5.
constexpr std::array<GaussianRow, 3> kGaussianDirect{{
    {10, {1.87044199, 1.3542724, 3.981098, 1.71171, -0.8381094}},
    {20, {1.87100878, 1.3554650, 3.992369, 1.73551, -0.8399212}},
    {50, {1.87098367, 1.3553807, 3.991570, 1.73376, -0.8397777}},
}};
constexpr double kGaussianPresentH = 0.4;
constexpr double kGaussianDirectH = 0.5;

Check absolute(std::string name, double value, double expected, double tol, std::string note = {}) {
  return {std::move(name), value, expected, tol, std::abs(value - expected) <= tol, std::move(note)};
}

Check relative(std::string name, double value, double expected, double tol, std::string note = {}) {
  const double scale = std::max(std::abs(expected), std::numeric_limits<double>::min());
  return {std::move(name), value, expected, tol, std::abs(value - expected) <= tol * scale,
          std::move(note)};
}

// value must be <= bound
Check at_most(std::string name, double value, double bound, std::string note = {}) {
  return {std::move(name), value, bound, bound, value <= bound, std::move(note)};
}

Check holds(std::string name, bool ok, std::string note = {}) {
  return {std::move(name), ok ? 1.0 : 0.0, 1.0, 0.0, ok, std::move(note)};
}

std::string tag(const std::string& what, int n) { return what + " N=" + std::to_string(n); }

GaussianObservables gaussian_observables(const Mesh& mesh, const SolveResult& r) {
  const auto model = models::gaussian_comparison_model().spec(0);
  const SpectralDecomposition decomp = spectral_decompose(r_squared_matrix(mesh, 0));
  GaussianObservables o;
  o.energy = r.energies[0];
  o.relativistic_energy = expectation(r, 0, MomentumFunction{[](double p2) { return std::sqrt(p2 + 1.0); }});
  o.p4 = expectation(r, 0, MomentumFunction{[](double p2) { return p2 * p2; }});
  o.radius = expectation(r, 0, observable_matrix(decomp, [](double r2) { return std::sqrt(r2); }));
  o.potential = expectation(r, 0, observable_matrix(decomp, model.potential));
  return o;
}

template <class F>
bool raises_singularity(F&& f) {
  try {
    f();
  } catch (const SingularityError&) {
    return true;
  }
  return false;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace

bool CriterionReport::passed() const { return failures() == 0; }

int CriterionReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

GaussianObservables gaussian_observables_spectral(int n, double h) {
  const Mesh mesh = build_mesh(n, h);
  return gaussian_observables(mesh, solve(mesh, models::gaussian_comparison_model().spec(0), 1));
}

GaussianObservables gaussian_observables_direct(int n, double h, int t_order) {
  const Mesh mesh = build_mesh(n, h);
  const auto model = models::gaussian_comparison_model().spec(0);
  const fourier_direct::PartialWaveKernel kernel(
      0, [](double k) { return fourier_direct::gaussian_vft(3.0, 1.0, k); }, t_order);
  OperatorMatrix hamiltonian = kinetic_matrix(mesh, model.kinetic);
  hamiltonian.data += fourier_direct::direct_potential_matrix(mesh, kernel).data;
  hamiltonian.role = OperatorRole::Hamiltonian;
  return gaussian_observables(mesh, solve_hamiltonian(mesh, 0, hamiltonian, 1));
}

CriterionReport coulomb_table() {
  CriterionReport rep{1, "Coulomb reference energies (h=0.5), abs 2e-6", {}};
  constexpr double h = 0.5;
  constexpr double tol = 2e-6;
  for (const auto& row : kCoulombTable) {
    const Mesh mesh = build_mesh(row.n, h);
    const auto s = solve(mesh, models::coulomb_test_model().spec(0), 2);
    const auto p = solve(mesh, models::coulomb_test_model().spec(1), 1);
    rep.checks.push_back(absolute(tag("E_1S", row.n), s.energies[0], row.e1s, tol));
    rep.checks.push_back(absolute(tag("E_2S", row.n), s.energies[1], row.e2s, tol));
    rep.checks.push_back(absolute(tag("E_1P", row.n), p.energies[0], row.e1p, tol));
  }
  // The l(l+1)/x_i centrifugal variant misses the 1P level by far.
  const Mesh mesh = build_mesh(200, h);
  OperatorMatrix ham = kinetic_matrix(mesh, [](double p2) { return p2; });
  ham.data += potential_matrix(spectral_decompose(r_squared_matrix(mesh, 1, CentrifugalForm::Inverse)),
                               [](double r2) { return -1.0 / std::sqrt(r2); })
                  .data;
  const double alt = solve_hamiltonian(mesh, 1, ham, 1).energies[0];
  rep.checks.push_back(holds("centrifugal l(l+1)/x_i rejected (E_1P N=200 off by > 1e-3)",
                             std::abs(alt - kCoulombTable[2].e1p) > 1e-3,
                             "E_1P with l(l+1)/x_i = " + std::to_string(alt)));
  return rep;
}

CriterionReport coulomb_analytic() {
  CriterionReport rep{2, "Analytic Coulomb limits at N=300, abs 2e-6", {}};
  constexpr double tol = 2e-6;
  const Mesh mesh = build_mesh(300, 0.5);
  const auto s = solve(mesh, models::coulomb_test_model().spec(0), 2);
  const auto p = solve(mesh, models::coulomb_test_model().spec(1), 1);
  rep.checks.push_back(absolute("E_1S -> -1/4", s.energies[0], models::analytic_coulomb_energy(0, 0), tol));
  rep.checks.push_back(absolute("E_2S -> -1/16", s.energies[1], models::analytic_coulomb_energy(1, 0), tol));
  rep.checks.push_back(absolute("E_1P -> -1/16", p.energies[0], models::analytic_coulomb_energy(0, 1), tol));
  return rep;
}

CriterionReport fulcher_table() {
  CriterionReport rep{3, "Cornell meson model reference energies (h=0.5), abs 5e-6 GeV", {}};
  constexpr double h = 0.5;
  constexpr double tol = 5e-6;
  std::array<double, 3> last{};
  for (const auto& row : kFulcherTable) {
    const Mesh mesh = build_mesh(row.n, h);
    const auto s = solve(mesh, models::fulcher_model().spec(0), 2);
    const auto p = solve(mesh, models::fulcher_model().spec(1), 1);
    rep.checks.push_back(absolute(tag("E_1S", row.n), s.energies[0], row.e1s, tol));
    rep.checks.push_back(absolute(tag("E_2S", row.n), s.energies[1], row.e2s, tol));
    rep.checks.push_back(absolute(tag("E_1P", row.n), p.energies[0], row.e1p, tol));
    last = {s.energies[0], s.energies[1], p.energies[0]};
  }
  const std::array<const char*, 3> names{"1S", "2S", "1P"};
  for (std::size_t k = 0; k < 3; ++k) {
    rep.checks.push_back(absolute(std::string("four-digit agreement ") + names[k] + " N=80", last[k],
                                  kFulcherReference[k], 5e-4));
  }
  return rep;
}

CriterionReport gaussian_table() {
  CriterionReport rep{4, "Gaussian well observables, rel 5e-6", {}};
  constexpr double tol = 5e-6;
  auto add_row = [&rep](const std::string& prefix, int n, const GaussianObservables& got,
                        const GaussianObservables& want) {
    rep.checks.push_back(relative(prefix + tag(" E", n), got.energy, want.energy, tol));
    rep.checks.push_back(relative(prefix + tag(" <sqrt(p^2+m^2)>", n), got.relativistic_energy,
                                  want.relativistic_energy, tol));
    rep.checks.push_back(relative(prefix + tag(" <p^4>", n), got.p4, want.p4, tol));
    rep.checks.push_back(relative(prefix + tag(" <r>", n), got.radius, want.radius, tol));
    rep.checks.push_back(relative(prefix + tag(" <U(r)>", n), got.potential, want.potential, tol));
  };
  for (const auto& row : kGaussianPresent) {
    const auto got = gaussian_observables_spectral(row.n, kGaussianPresentH);
    add_row("present h=0.4", row.n, got, row.values);
    rep.checks.push_back(holds(tag("0 < E < 2", row.n), got.energy > 0.0 && got.energy < 2.0));
  }
  for (const auto& row : kGaussianDirect) {
    add_row("direct h=0.5", row.n, gaussian_observables_direct(row.n, kGaussianDirectH), row.values);
  }
  // The direct route cannot build a Coulomb potential matrix.
  bool diverged = false;
  try {
    const Mesh mesh = build_mesh(10, kGaussianPresentH);
    fourier_direct::direct_potential_matrix(
        mesh, [](double p, double pp) { return fourier_direct::coulomb_partial_wave(1.0, 0, p, pp); });
  } catch (const SingularityError&) {
    diverged = true;
  }
  rep.checks.push_back(holds("direct Coulomb matrix raises singularity error", diverged));
  return rep;
}

CriterionReport density_fidelity() {
  CriterionReport rep{5, "Coulomb densities vs analytic, default grids, L-inf 1e-3", {}};
  constexpr double h = 0.5;
  constexpr double tol = 1e-3;
  struct Target {
    CoulombState state;
    int l;
    int k;
    const char* name;
  };
  constexpr std::array<Target, 3> targets{{
      {CoulombState::S1, 0, 0, "1S"},
      {CoulombState::S2, 0, 1, "2S"},
      {CoulombState::P1, 1, 0, "1P"},
  }};
  const Mesh pmesh = build_mesh(135, h);
  const Mesh rmesh = build_mesh(150, h);
  const auto pgrid = default_momentum_grid(pmesh);
  const auto rgrid = default_radius_grid(rmesh);
  for (const auto& t : targets) {
    const auto model = models::coulomb_test_model().spec(t.l);
    const auto pr = solve(pmesh, model, t.k + 1);
    const auto lmm_p = momentum_density(pr, t.k, pgrid);
    const auto ref_p = analytic_coulomb_reference(t.state, DensityVariable::Momentum, pgrid);
    std::ostringstream pn;
    pn << "p in [0, " << pgrid.back() << "]";
    rep.checks.push_back(at_most(std::string("momentum ") + t.name + " N=135",
                                 max_abs_diff(lmm_p.values, ref_p.values), tol, pn.str()));

    const auto rr = solve(rmesh, model, t.k + 1);
    const auto lmm_r = radial_density(rr, t.k, rgrid);
    const auto ref_r = analytic_coulomb_reference(t.state, DensityVariable::Radius, rgrid);
    std::ostringstream rn;
    rn << "r in [0, " << rgrid.back() << "]";
    rep.checks.push_back(at_most(std::string("radial ") + t.name + " N=150",
                                 max_abs_diff(lmm_r.values, ref_r.values), tol, rn.str()));
  }
  return rep;
}

CriterionReport plateau() {
  CriterionReport rep{6, "h-plateau of E_1S on [0.1, 1], 20 log points", {}};
  std::vector<double> grid(20);
  for (int k = 0; k < 20; ++k) grid[k] = std::pow(10.0, -1.0 + k / 19.0);
  const auto model = models::coulomb_test_model().spec(0);
  auto spread = [&](int n) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& pt : scan_h(model, n, grid, 0)) {
      if (!pt.energy) return std::numeric_limits<double>::infinity();
      lo = std::min(lo, *pt.energy);
      hi = std::max(hi, *pt.energy);
    }
    return hi - lo;
  };
  const double s100 = spread(100);
  const double s20 = spread(20);
  rep.checks.push_back(at_most("spread N=100", s100, 1e-3));
  rep.checks.push_back(holds("spread N=100 < spread N=20", s100 < s20,
                             "N=20 spread " + std::to_string(s20) + ", N=100 spread " + std::to_string(s100)));
  return rep;
}

CriterionReport coulomb_divergence() {
  CriterionReport rep{7, "Direct Coulomb route: divergent diagonal, finite off-diagonal", {}};
  constexpr double h = 0.5;
  for (int l = 0; l <= 2; ++l) {
    const fourier_direct::PartialWaveKernel yukawa(
        l, [](double k) { return fourier_direct::yukawa_vft(1.0, 1e-6, k); }, 200);
    for (int n : {2, 3, 5, 10, 20, 50}) {
      const Mesh mesh = build_mesh(n, h);
      int diverged = 0;
      bool finite_symmetric = true;
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        const double p = h * mesh.node(i);
        const bool element = raises_singularity([&] { fourier_direct::coulomb_direct_element(mesh, i, i, l); });
        const bool wave = raises_singularity([&] { fourier_direct::coulomb_partial_wave(1.0, l, p, p); });
        if (element && wave) ++diverged;
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const double a = fourier_direct::coulomb_direct_element(mesh, i, j, l);
          const double b = fourier_direct::coulomb_direct_element(mesh, j, i, l);
          if (!std::isfinite(a) || a != b) finite_symmetric = false;
          const double p = h * mesh.node(i);
          const double pp = h * mesh.node(j);
          const double closed = fourier_direct::coulomb_partial_wave(1.0, l, p, pp);
          const double numeric = yukawa(p, pp);
          worst = std::max(worst, std::abs(numeric / closed - 1.0));
        }
      }
      const std::string where = " N=" + std::to_string(n) + " l=" + std::to_string(l);
      rep.checks.push_back(absolute("divergent diagonals" + where, diverged, n, 0.0));
      rep.checks.push_back(holds("finite symmetric off-diagonal" + where, finite_symmetric));
      rep.checks.push_back(at_most("Q_l vs Yukawa(mu=1e-6) rel" + where, worst, 1e-4));
    }
  }
  return rep;
}

CriterionReport properties() {
  CriterionReport rep{8, "Property suites", {}};

  double worst_exact = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const Mesh mesh = build_mesh(n, 1.0);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      std::vector<double> g(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) g[k] = std::pow(mesh.node(k), d) * std::exp(-mesh.node(k));
      const double want = std::exp(specfun::log_gamma(d + 1.0));
      worst_exact = std::max(worst_exact, std::abs(quadrature_sum(mesh, g) / want - 1.0));
    }
  }
  rep.checks.push_back(at_most("quadrature exactness n<=20, d<=2n-1 (rel)", worst_exact, 1e-10));

  double worst_card = 0.0;
  double worst_ortho = 0.0;
  for (int n : {5, 20, 50, 100}) {
    const Mesh mesh = build_mesh(n, 1.0);
    const LagrangeBasis basis(mesh);
    Eigen::MatrixXd f(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) f(i, j) = basis.eval(i, mesh.node(j));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double scale = std::exp(-0.5 * mesh.log_weight(j));
        const double want = i == j ? scale : 0.0;
        worst_card = std::max(worst_card, std::abs(f(i, j) - want) / scale);
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += std::exp(mesh.log_weight(k)) * f(i, k) * f(j, k);
        worst_ortho = std::max(worst_ortho, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    }
  }
  rep.checks.push_back(at_most("Lagrange cardinality N<=100", worst_card, 1e-10));
  rep.checks.push_back(at_most("quadrature orthonormality N<=100", worst_ortho, 1e-12));

  bool r2_ok = true;
  for (int n : {10, 50, 300}) {
    for (int l : {0, 1, 2}) {
      const auto m = r_squared_matrix(build_mesh(n, 0.5), l);
      const double asym = (m.data - m.data.transpose()).cwiseAbs().maxCoeff();
      if (asym > 1e-12 * m.data.cwiseAbs().maxCoeff()) r2_ok = false;
      try {
        spectral_decompose(m);
      } catch (const DegeneracyError&) {
        r2_ok = false;
      }
    }
  }
  rep.checks.push_back(holds("R^2 symmetric and positive definite", r2_ok));

  {
    const auto m = r_squared_matrix(build_mesh(50, 0.5), 0);
    const auto decomp = spectral_decompose(m);
    const double scale = m.data.cwiseAbs().maxCoeff();
    const auto id = potential_matrix(decomp, [](double r2) { return r2; });
    rep.checks.push_back(at_most("spectral identity V(r^2)=r^2 (rel to max|R^2|)",
                                 (id.data - m.data).cwiseAbs().maxCoeff() / scale, 1e-10));
    const auto cst = potential_matrix(decomp, [](double) { return 2.5; });
    const Eigen::MatrixXd eye = 2.5 * Eigen::MatrixXd::Identity(50, 50);
    rep.checks.push_back(at_most("spectral constant V=c", (cst.data - eye).cwiseAbs().maxCoeff(), 1e-10));
  }

  {
    const Mesh mesh = build_mesh(60, 0.5);
    const auto r = solve(mesh, models::coulomb_test_model().spec(0), 3);
    double worst_norm = 0.0;
    for (int k = 0; k < 3; ++k) {
      std::vector<double> xs(mesh.nodes().begin(), mesh.nodes().end());
      std::vector<double> ps(xs);
      for (double& p : ps) p *= mesh.h();
      const auto dens = momentum_density(r, k, ps);
      double s = 0.0;
      for (int i = 0; i < mesh.n(); ++i) s += std::exp(mesh.log_weight(i)) * dens.values[i] * mesh.h();
      worst_norm = std::max(worst_norm, std::abs(s - 1.0));
    }
    rep.checks.push_back(at_most("density quadrature normalization", worst_norm, 1e-12));
  }

  {
    double worst_res = 0.0;
    auto residuals = [&worst_res](const Mesh& mesh, const ModelSpec& model, int states) {
      const auto ham = assemble_hamiltonian(mesh, model);
      const auto r = solve_hamiltonian(mesh, model.l, ham, states);
      for (int k = 0; k < states; ++k) {
        const Eigen::VectorXd c = r.states.col(k);
        const double res = (ham.data * c - r.energies[k] * c).norm() / (1.0 + std::abs(r.energies[k]));
        worst_res = std::max(worst_res, res);
      }
    };
    residuals(build_mesh(300, 0.5), models::coulomb_test_model().spec(0), 3);
    residuals(build_mesh(80, 0.5), models::fulcher_model().spec(1), 3);
    residuals(build_mesh(50, 0.4), models::gaussian_comparison_model().spec(0), 3);
    rep.checks.push_back(at_most("residual ||HC-EC|| / (1+|E|)", worst_res, 1e-9));
  }
  return rep;
}

std::vector<CriterionReport> run_suite(Suite suite) {
  switch (suite) {
    case Suite::Coulomb:
      return {coulomb_table(), coulomb_analytic()};
    case Suite::Fulcher:
      return {fulcher_table()};
    case Suite::Gaussian:
      return {gaussian_table()};
    case Suite::All:
      return {coulomb_table(), coulomb_analytic(), fulcher_table(), gaussian_table(),
              density_fidelity(), plateau(), coulomb_divergence(), properties()};
  }
  return {};
}

}  // namespace lmm::validation
