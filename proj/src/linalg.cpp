#include "cartan/linalg.hpp"

#include <cmath>
#include <random>

namespace cartan {

SvdResult svd(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SvdResult{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

namespace {

ComplexVector seeded_unit_vector(Eigen::Index n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(dist(rng), dist(rng));
  double nrm = v.norm();
  if (nrm == 0.0) {
    v.setZero();
    v(0) = 1.0;
    nrm = 1.0;
  }
  return v / nrm;
}

}  // namespace

double spectral_radius(const ComplexMatrix& m, const PowerIterationOptions& opts) {
  require(m.rows() == m.cols(), "spectral_radius: matrix must be square");
  if (m.size() == 0) return 0.0;
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;

  int iterations_left = opts.max_iterations;
  for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
    ComplexVector x = seeded_unit_vector(m.rows(), opts.start_seed + uint64_t(attempt));
    double lambda = 0.0;
    while (iterations_left-- > 0) {
      ComplexVector y = m * x;
      const double ynorm = y.norm();
      if (ynorm <= scale * 1e-300) break;  // start vector fell into the kernel
      const double next = std::abs((x.adjoint() * y)(0));  // Rayleigh quotient
      x = y / ynorm;
      if (std::abs(next - lambda) <= opts.tolerance * std::max(next, scale * 1e-6)) {
        return next;
      }
      lambda = next;
    }
    if (iterations_left <= 0) break;
  }
  throw NumericalError("spectral_radius: power iteration did not converge");
}

ComplexMatrix inverse_sqrt(const ComplexMatrix& hermitian, double cond_cap) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double vmax = ev.maxCoeff();
  if (vmax <= 0.0 || ev.minCoeff() <= vmax / (cond_cap * cond_cap)) {
    throw NumericalError("inverse_sqrt: matrix not positive definite within condition cap");
  }
  Eigen::VectorXd d = ev.array().rsqrt();
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix polar_isometry(const ComplexMatrix& t, double cond_cap) {
  require(t.rows() == t.cols(), "polar_isometry: matrix must be square");
  const ComplexMatrix gram = t.adjoint() * t;
  ComplexMatrix root;
  try {
    root = inverse_sqrt(gram, cond_cap);
  } catch (const NumericalError&) {
    throw NumericalError("polar_isometry: singular input");
  }
  return t * root;
}

}  // namespace cartan
