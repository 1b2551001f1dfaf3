#pragma once

#include <Eigen/Dense>

#include "cartan/common.hpp"

namespace cartan {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct SvdResult {
  ComplexMatrix u;                  // full, orthonormal columns
  Eigen::VectorXd singular_values;  // descending, nonnegative
  ComplexMatrix v;                  // full, orthonormal columns
};

/// m = u * diag(singular_values) * v^adjoint.
SvdResult svd(const ComplexMatrix& m);

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 100000;
  uint64_t start_seed = 0x5eedULL;
  int restarts = 3;
};

/// Largest eigenvalue modulus of a square matrix that is diagonalizable with
/// real nonnegative spectrum (the matrices of z box z).  Deterministic seeded
/// start vector; throws NumericalError on non-convergence.
double spectral_radius(const ComplexMatrix& m, const PowerIterationOptions& opts = {});

/// Inverse square root of a hermitian positive definite matrix, by
/// eigendecomposition.
ComplexMatrix inverse_sqrt(const ComplexMatrix& hermitian, double cond_cap = 1e12);

/// P = T (T^* T)^{-1/2}; an isometry whenever T is invertible.
/// Throws NumericalError if T is singular past the condition cap.
ComplexMatrix polar_isometry(const ComplexMatrix& t, double cond_cap = 1e12);

}  // namespace cartan
