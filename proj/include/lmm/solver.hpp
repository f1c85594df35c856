#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "lmm/operators.hpp"
#include "lmm/quadrature.hpp"

namespace lmm {

/// One eigenproblem [T(p^2) + V(r^2)] psi = E psi at fixed angular momentum l.
struct ModelSpec {
  RealFunction kinetic;    // T as a function of p^2
  RealFunction potential;  // V as a function of r^2
  int l = 0;
  std::string label;
};

/// Lowest eigenpairs of a Hamiltonian on the Lagrange basis.
///
/// Column k of `states` is the unit-norm coefficient vector C of state k, with
/// the sign fixed so that its largest-magnitude component is positive.
struct SolveResult {
  std::vector<double> energies;
  Eigen::MatrixXd states;
  std::vector<std::string> labels;
  Mesh mesh;
  int l = 0;

  int size() const noexcept { return static_cast<int>(energies.size()); }
  Eigen::VectorXd state(int k) const;
};

/// Spectroscopic label of the k-th (zero-based) state at angular momentum l: "1S", "2S", "1P", ...
std::string spectroscopic_label(int k, int l);

/// H = T + S diag(V(d)) S^T with S, d from the R^2 matrix at the model's l.
OperatorMatrix assemble_hamiltonian(const Mesh& mesh, const ModelSpec& model);

/// Diagonalizes an already assembled Hamiltonian.
SolveResult solve_hamiltonian(const Mesh& mesh, int l, const OperatorMatrix& hamiltonian,
                              int n_states);

SolveResult solve(const Mesh& mesh, const ModelSpec& model, int n_states);

/// Momentum observable g(p^2), evaluated through the node values:
/// <g> ~= sum_k C_k^2 g(h^2 x_k^2).
struct MomentumFunction {
  RealFunction g;
};

double expectation(const SolveResult& result, int state_index, const MomentumFunction& kind);

/// Position observable as a matrix on the basis (see observable_matrix): C^T M C.
double expectation(const SolveResult& result, int state_index, const OperatorMatrix& matrix);

struct ScanPoint {
  double h = 0.0;
  std::optional<double> energy;  // empty when the solve at this h failed
  std::string error;
};

/// One full solve per h, returned in grid order. Per-point failures are recorded.
std::vector<ScanPoint> scan_h(const ModelSpec& model, int n, const std::vector<double>& h_grid,
                              int state_index);

}  // namespace lmm
