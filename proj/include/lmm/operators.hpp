#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string_view>

#include "lmm/quadrature.hpp"

namespace lmm {

/// Scalar function of a squared variable: T(p^2), V(r^2), O(r^2).
using RealFunction = std::function<double(double)>;

enum class OperatorRole { Kinetic, RSquared, Potential, Hamiltonian, Observable };

std::string_view to_string(OperatorRole role);

/// Dense symmetric N x N matrix on the Lagrange basis, tagged with its role.
struct OperatorMatrix {
  Eigen::MatrixXd data;
  OperatorRole role = OperatorRole::Observable;
  int mesh_n = 0;
  double h = 0.0;
};

/// R^2 = S D^2 S^T. Eigenvalues ascending; columns of `transition` are the eigenvectors.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd transition;
  int mesh_n = 0;
  double h = 0.0;
};

/// Form of the centrifugal contribution on the diagonal of R^2.
/// InverseSquare, l(l+1)/x_i^2, is the one reproducing the Coulomb 1P level;
/// Inverse, l(l+1)/x_i, is kept only to document that it does not.
enum class CentrifugalForm { InverseSquare, Inverse };

/// Diagonal matrix T(h^2 x_i^2). Throws ModelDomainError if T is not finite at a node.
OperatorMatrix kinetic_matrix(const Mesh& mesh, const RealFunction& kinetic);

/// Matrix of r^2 at angular momentum l:
///   R^2_ij = (r^2_ij + l(l+1)/x_i^2 delta_ij) / h^2
///   r^2_ij = (-1)^{i-j} (x_i x_j)^{-1/2} (x_i + x_j) / (x_i - x_j)^2     (i != j)
///   r^2_ii = (4 + (4N+2) x_i - x_i^2) / (12 x_i^2)
OperatorMatrix r_squared_matrix(const Mesh& mesh, int l,
                                CentrifugalForm form = CentrifugalForm::InverseSquare);

/// Full eigendecomposition of an R^2 matrix. Throws DegeneracyError when an
/// eigenvalue is not strictly positive.
SpectralDecomposition spectral_decompose(const OperatorMatrix& r_squared);

/// S diag(V(d_k)) S^T, symmetrized. Throws ModelDomainError if V(d_k) is not finite.
OperatorMatrix potential_matrix(const SpectralDecomposition& decomp, const RealFunction& potential);

/// Same construction as potential_matrix for a position observable O(r^2).
OperatorMatrix observable_matrix(const SpectralDecomposition& decomp, const RealFunction& observable);

}  // namespace lmm
