#include "lmm/solver.hpp"

#include <cmath>
#include <future>
#include <string>

#include "lmm/errors.hpp"

namespace lmm {

namespace {

constexpr std::string_view kOrbitalLetters = "SPDFGHIKLMNOQRTUVWXYZ";

std::string context(const ModelSpec& model) {
  return "model '" + (model.label.empty() ? std::string("unnamed") : model.label) +
         "', l=" + std::to_string(model.l) + ": ";
}

void check_state_index(const SolveResult& result, int state_index) {
  if (state_index < 0 || state_index >= result.size()) {
    throw ParameterError("state index " + std::to_string(state_index) + " out of range [0, " +
                         std::to_string(result.size()) + ")");
  }
}

}  // namespace

Eigen::VectorXd SolveResult::state(int k) const { return states.col(k); }

std::string spectroscopic_label(int k, int l) {
  std::string letter = static_cast<std::size_t>(l) < kOrbitalLetters.size()
                           ? std::string(1, kOrbitalLetters[static_cast<std::size_t>(l)])
                           : "[l=" + std::to_string(l) + "]";
  return std::to_string(k + 1) + letter;
}

OperatorMatrix assemble_hamiltonian(const Mesh& mesh, const ModelSpec& model) {
  try {
    OperatorMatrix h = kinetic_matrix(mesh, model.kinetic);
    const SpectralDecomposition decomp = spectral_decompose(r_squared_matrix(mesh, model.l));
    h.data += potential_matrix(decomp, model.potential).data;
    h.role = OperatorRole::Hamiltonian;
    return h;
  } catch (const ModelDomainError& e) {
    throw ModelDomainError(context(model) + e.what());
  } catch (const DegeneracyError& e) {
    throw DegeneracyError(context(model) + e.what(), e.value());
  } catch (const ParameterError& e) {
    throw ParameterError(context(model) + e.what());
  }
}

SolveResult solve_hamiltonian(const Mesh& mesh, int l, const OperatorMatrix& hamiltonian,
                              int n_states) {
  const int n = mesh.n();
  if (n_states < 1 || n_states > n) {
    throw ParameterError("solve: number of states must be in [1, " + std::to_string(n) +
                         "], got " + std::to_string(n_states));
  }
  if (hamiltonian.data.rows() != n || hamiltonian.data.cols() != n) {
    throw ParameterError("solve: Hamiltonian dimension does not match the mesh");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hamiltonian.data);
  if (eig.info() != Eigen::Success) {
    throw InternalError("solve: symmetric eigensolver did not converge");
  }
  SolveResult r{{}, Eigen::MatrixXd(n, n_states), {}, mesh, l};
  r.energies.reserve(static_cast<std::size_t>(n_states));
  for (int k = 0; k < n_states; ++k) {
    r.energies.push_back(eig.eigenvalues()(k));
    Eigen::VectorXd c = eig.eigenvectors().col(k);
    Eigen::Index largest = 0;
    c.cwiseAbs().maxCoeff(&largest);
    if (c(largest) < 0.0) c = -c;
    r.states.col(k) = c.normalized();
    r.labels.push_back(spectroscopic_label(k, l));
  }
  return r;
}

SolveResult solve(const Mesh& mesh, const ModelSpec& model, int n_states) {
  return solve_hamiltonian(mesh, model.l, assemble_hamiltonian(mesh, model), n_states);
}

double expectation(const SolveResult& result, int state_index, const MomentumFunction& kind) {
  check_state_index(result, state_index);
  const Mesh& mesh = result.mesh;
  double s = 0.0;
  for (int k = 0; k < mesh.n(); ++k) {
    const double p = mesh.h() * mesh.node(k);
    const double c = result.states(k, state_index);
    s += c * c * kind.g(p * p);
  }
  return s;
}

double expectation(const SolveResult& result, int state_index, const OperatorMatrix& matrix) {
  check_state_index(result, state_index);
  const int n = result.mesh.n();
  if (matrix.data.rows() != n || matrix.data.cols() != n) {
    throw ParameterError("expectation: matrix dimension " + std::to_string(matrix.data.rows()) +
                         " does not match mesh size " + std::to_string(n));
  }
  const Eigen::VectorXd c = result.states.col(state_index);
  return c.dot(matrix.data * c);
}

std::vector<ScanPoint> scan_h(const ModelSpec& model, int n, const std::vector<double>& h_grid,
                              int state_index) {
  if (h_grid.empty()) throw ParameterError("scan_h: empty h grid");
  if (state_index < 0 || state_index >= n) {
    throw ParameterError("scan_h: state index out of range");
  }
  std::vector<std::future<ScanPoint>> jobs;
  jobs.reserve(h_grid.size());
  for (double h : h_grid) {
    jobs.push_back(std::async(std::launch::async, [&model, n, h, state_index] {
      ScanPoint pt;
      pt.h = h;
      try {
        const SolveResult r = solve(build_mesh(n, h), model, state_index + 1);
        pt.energy = r.energies[static_cast<std::size_t>(state_index)];
      } catch (const Error& e) {
        pt.error = e.what();
      }
      return pt;
    }));
  }
  std::vector<ScanPoint> out;
  out.reserve(h_grid.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace lmm
