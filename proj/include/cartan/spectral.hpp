#pragma once

#include <vector>

#include "cartan/triple.hpp"

namespace cartan {

/// z = sum alphas[i] * tripotents[i] with descending alphas >= 0 and mutually
/// orthogonal minimal tripotents; alphas[0] is the spectral norm.
struct SpectralDecomposition {
  Eigen::VectorXd alphas;
  std::vector<Element> tripotents;

  Element reconstruct() const;
};

/// Per-type algorithms: I singular value decomposition; II antisymmetric
/// (Youla) canonical form; III Takagi factorization; IV closed form from the
/// spin invariants; VI cubic Jordan eigenvalues with Lagrange idempotents
/// (self-adjoint elements with real octonion entries only).  Type V and
/// non-self-adjoint VI elements are refused with NumericalError.
SpectralDecomposition spectral_decompose(const Element& z);

}  // namespace cartan
