#pragma once

#include <string>
#include <vector>

#include "lmm/quadrature.hpp"
#include "lmm/solver.hpp"

namespace lmm::validation {

/// One numeric comparison against reference or derived data.
struct Check {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

/// A group of checks backing one acceptance criterion.
struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<Check> checks;

  bool passed() const;
  int failures() const;
};

// Each builder runs its computations and returns a fully evaluated report.
CriterionReport coulomb_table();        // 1: twelve reference Coulomb energies
CriterionReport coulomb_analytic();     // 2: N=300 against -1/(4 n^2)
CriterionReport fulcher_table();        // 3: 24 Cornell-model energies + reference agreement
CriterionReport gaussian_table();       // 4: present and direct-route observables
CriterionReport density_fidelity();     // 5: L-infinity distance to analytic densities
CriterionReport plateau();              // 6: h-plateau of the Coulomb ground state
CriterionReport coulomb_divergence();   // 7: direct Coulomb route diverges on the diagonal
CriterionReport properties();           // 8: quadrature/basis/operator/solver invariants

enum class Suite { Coulomb, Fulcher, Gaussian, All };

/// Criteria making up a CLI validation suite.
std::vector<CriterionReport> run_suite(Suite suite);

/// E, <sqrt(p^2+m^2)>, <p^4>, <r>, <U(r)> of the Gaussian-well ground state.
struct GaussianObservables {
  double energy = 0.0;
  double relativistic_energy = 0.0;  // <sqrt(p^2 + 1)>
  double p4 = 0.0;
  double radius = 0.0;
  double potential = 0.0;
};

/// Present method: R^2-spectral potential matrix.
GaussianObservables gaussian_observables_spectral(int n, double h);

/// Direct route: potential matrix from the partial-wave Fourier transform.
GaussianObservables gaussian_observables_direct(int n, double h, int t_order = 200);

}  // namespace lmm::validation
