#include "cartan/spectral.hpp"

#include <algorithm>
#include <optional>
#include <cmath>

#include "cartan/albert.hpp"

namespace cartan {

Element SpectralDecomposition::reconstruct() const {
  require(!tripotents.empty(), "empty decomposition");
  Element acc = Element::zero(tripotents.front().factor());
  for (size_t i = 0; i < tripotents.size(); ++i) {
    acc += tripotents[i] * Complex(alphas(static_cast<Eigen::Index>(i)), 0);
  }
  return acc;
}

namespace {

constexpr double kZeroCutoff = 1e-12;

SpectralDecomposition decompose_type_i(const Element& z) {
  const FactorDescriptor& f = z.factor();
  const SvdResult s = svd(z.matrix());
  SpectralDecomposition out;
  out.alphas.resize(f.l);
  for (int k = 0; k < f.l; ++k) {
    out.alphas(k) = s.singular_values(k);
    ComplexMatrix e = s.u.col(k) * s.v.col(k).adjoint();
    out.tripotents.emplace_back(f, std::move(e));
  }
  return out;
}

// Complex symmetric: peel con-eigenvectors A conj(w) = sigma w off the top
// singular space, one at a time.  Each step needs only a singular pair, so
// degenerate singular values are no special case.
SpectralDecomposition decompose_takagi(const Element& z) {
  const FactorDescriptor& f = z.factor();
  ComplexMatrix a = z.matrix();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  SpectralDecomposition out;
  std::vector<double> alphas;
  for (int step = 0; step < f.l; ++step) {
    const SvdResult s = svd(a);
    const double sigma = s.singular_values(0);
    if (sigma <= kZeroCutoff * scale) break;
    const ComplexVector u = s.u.col(0);
    const ComplexVector v = s.v.col(0);
    // A maps conj(u) -> sigma conj(v) and v -> sigma u, so the antilinear map
    // x -> A conj(x)/sigma is an involution on span{u, conj(v)}.
    ComplexVector w = u + v.conjugate();
    ComplexVector w2 = Complex(0, 1) * (u - v.conjugate());
    if (w2.norm() > w.norm()) w = w2;
    w.normalize();
    alphas.push_back(sigma);
    ComplexMatrix e = w * w.transpose();
    a -= sigma * e;
    out.tripotents.emplace_back(f, std::move(e));
  }
  if (alphas.empty()) {
    alphas.push_back(0.0);
    out.tripotents.push_back(canonical_axis_tripotents(f).front());
  }
  out.alphas = Eigen::Map<Eigen::VectorXd>(alphas.data(), static_cast<Eigen::Index>(alphas.size()));
  return out;
}

// Complex antisymmetric: singular values pair up; the top pair (u, v) gives
// the canonical block sigma (q p^t - p q^t) with p = u, q = -conj(v).
SpectralDecomposition decompose_youla(const Element& z) {
  const FactorDescriptor& f = z.factor();
  ComplexMatrix a = z.matrix();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  SpectralDecomposition out;
  std::vector<double> alphas;
  for (int step = 0; step < f.rank(); ++step) {
    const SvdResult s = svd(a);
    const double sigma = s.singular_values(0);
    if (sigma <= kZeroCutoff * scale) break;
    const ComplexVector p = s.u.col(0);
    const ComplexVector q = -s.v.col(0).conjugate();
    alphas.push_back(sigma);
    ComplexMatrix e = q * p.transpose() - p * q.transpose();
    a -= sigma * e;
    out.tripotents.emplace_back(f, std::move(e));
  }
  if (alphas.empty()) {
    alphas.push_back(0.0);
    out.tripotents.push_back(canonical_axis_tripotents(f).front());
  }
  out.alphas = Eigen::Map<Eigen::VectorXd>(alphas.data(), static_cast<Eigen::Index>(alphas.size()));
  return out;
}

// Deterministic real unit vector orthogonal to x (used when the spin
// decomposition degenerates).
Eigen::VectorXd orthogonal_completion(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  Eigen::Index pivot = 0;
  x.cwiseAbs().minCoeff(&pivot);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  y(pivot) = 1.0;
  y -= y.dot(x) * x;
  const double nrm = y.norm();
  require(nrm > 1e-6, "orthogonal completion failed");
  return y / nrm;
}

SpectralDecomposition decompose_spin(const Element& z) {
  const FactorDescriptor& f = z.factor();
  const ComplexVector& v = z.vector();
  const double q = v.squaredNorm();
  const Complex theta = (v.array() * v.array()).sum();  // <z, z*>
  const double s = std::abs(theta);

  SpectralDecomposition out;
  out.alphas.resize(2);
  out.alphas(0) = (std::sqrt(q + s) + std::sqrt(std::max(0.0, q - s))) / 2.0;
  out.alphas(1) = (std::sqrt(q + s) - std::sqrt(std::max(0.0, q - s))) / 2.0;

  if (q <= kZeroCutoff * kZeroCutoff) {
    // Zero element: canonical frame.
    ComplexVector e1 = ComplexVector::Zero(f.n);
    ComplexVector e2 = ComplexVector::Zero(f.n);
    const double r = 1.0 / std::sqrt(2.0);
    e1(0) = r;
    e1(1) = Complex(0, r);
    e2(0) = r;
    e2(1) = Complex(0, -r);
    out.alphas.setZero();
    out.tripotents.emplace_back(f, std::move(e1));
    out.tripotents.emplace_back(f, std::move(e2));
    return out;
  }

  // Phase-correct so that <w, w*> is real nonnegative, then split into the
  // conjugation-fixed parts: w = x + iy with real x perp y.
  const double phase = s > kZeroCutoff * q ? std::arg(theta) : 0.0;
  const Complex half_phase = std::polar(1.0, phase / 2.0);
  const ComplexVector w = v / half_phase;
  Eigen::VectorXd x = w.real();
  Eigen::VectorXd y = w.imag();
  const double xn = x.norm();
  const double yn = y.norm();

  Eigen::VectorXd xh = x / xn;  // |x| >= |y| > 0 or |y| ~ 0
  Eigen::VectorXd yh;
  if (yn > kZeroCutoff * xn) {
    yh = y / yn;
    yh -= yh.dot(xh) * xh;  // exact orthogonality against roundoff
    yh.normalize();
  } else {
    yh = orthogonal_completion(xh);
  }

  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector e1 = half_phase * r * (xh + Complex(0, 1) * yh);
  ComplexVector e2 = half_phase * r * (xh - Complex(0, 1) * yh);
  out.tripotents.emplace_back(f, std::move(e1));
  out.tripotents.emplace_back(f, std::move(e2));
  return out;
}

// ---- Type VI: cubic Jordan algebra route ---------------------------------

bool is_real_albert(const Hermitian3& h, double tol) {
  double imag = 0;
  for (int i = 0; i < 3; ++i) {
    imag = std::max(imag, std::abs(h.diag[i].imag()));
    for (int m = 0; m < 8; ++m) imag = std::max(imag, std::abs(h.off[i][m].imag()));
  }
  return imag <= tol;
}

// Roots of lambda^3 - e1 lambda^2 + e2 lambda - e3, all real for elements of
// the formally real Albert algebra; via the companion matrix.
Eigen::Vector3d cubic_roots(double e1, double e2, double e3) {
  Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
  companion(1, 0) = 1;
  companion(2, 1) = 1;
  companion(0, 2) = e3;
  companion(1, 2) = -e2;
  companion(2, 2) = e1;
  const Eigen::EigenSolver<Eigen::Matrix3d> es(companion);
  Eigen::Vector3d roots;
  for (int i = 0; i < 3; ++i) roots(i) = es.eigenvalues()(i).real();
  std::sort(roots.data(), roots.data() + 3, std::greater<double>());
  return roots;
}

// U_c(y) = 2 c o (c o y) - c o y for an idempotent c: the projection onto
// the Peirce-1 subalgebra of c.
Hermitian3 peirce_project(const Hermitian3& c, const Hermitian3& y) {
  const Hermitian3 cy = jordan_mult(c, y);
  return herm_add(herm_scale(jordan_mult(c, cy), 2.0), herm_scale(cy, -1.0));
}

struct PairSplit {
  Hermitian3 d_hi, d_lo;
  double mu_hi = 0, mu_lo = 0;
};

// The Peirce-1 subalgebra of a rank-2 idempotent c has rank 2, so any element
// u there satisfies u^2 = t u - n c; distinct roots split c into primitive
// idempotents diagonalizing u.
std::optional<PairSplit> try_split(const Hermitian3& c, const Hermitian3& u) {
  // In the rank-2 subalgebra with unit c, u = mu+ d1 + mu- d2 where d1, d2
  // are trace-orthonormal primitive idempotents summing to c.  The trace form
  // reads off mu+ + mu- and |mu+ - mu-| without cancellation.
  const Vector27 cu = herm_coordinates(u);
  const Vector27 cc = herm_coordinates(c);
  const double t = cc.dot(cu).real();
  const double delta = std::sqrt(2.0) * (cu - 0.5 * t * cc).norm();
  if (delta <= 1e-9 * std::max(1.0, cu.norm())) return std::nullopt;  // u ~ scalar on c
  PairSplit s;
  s.mu_hi = (t + delta) / 2.0;
  s.mu_lo = (t - delta) / 2.0;
  s.d_hi = herm_scale(herm_add(u, herm_scale(c, -s.mu_lo)), 1.0 / delta);
  s.d_lo = herm_add(c, herm_scale(s.d_hi, -1.0));
  const Hermitian3 dd = jordan_mult(s.d_hi, s.d_hi);
  if ((herm_coordinates(dd) - herm_coordinates(s.d_hi)).norm() > 1e-6) return std::nullopt;
  return s;
}

// Splits a rank-2 idempotent with no eigenvalue information, seeding from the
// coordinate basis; used when z is a scalar on the pair subalgebra.
PairSplit split_rank2_idempotent(const Hermitian3& c, double mu) {
  for (int seed = 0; seed < 27; ++seed) {
    Vector27 sc = Vector27::Zero();
    sc(seed) = 1.0;
    const Hermitian3 u = peirce_project(c, herm_from_coordinates(sc));
    if (auto s = try_split(c, u)) {
      s->mu_hi = s->mu_lo = mu;
      return *s;
    }
  }
  throw NumericalError("failed to split a rank-2 idempotent");
}

SpectralDecomposition decompose_albert(const Element& z) {
  const FactorDescriptor& f = z.factor();
  const Hermitian3& h = z.herm();
  const Vector27 coords = herm_coordinates(h);
  const double scale = std::max(1.0, coords.cwiseAbs().maxCoeff());
  if (!is_real_albert(h, 1e-10 * scale)) {
    throw UnsupportedError(
        "decomposition unsupported: type VI requires self-adjoint elements "
        "with real octonion entries");
  }

  const Hermitian3 h2 = jordan_mult(h, h);
  const Hermitian3 h3 = jordan_mult(h2, h);
  const double p1 = herm_trace(h).real();
  const double p2 = herm_trace(h2).real();
  const double p3 = herm_trace(h3).real();
  const double e1 = p1;
  const double e2 = (e1 * p1 - p2) / 2.0;
  const double e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
  const Eigen::Vector3d lambda = cubic_roots(e1, e2, e3);

  const Hermitian3 one = herm_identity();
  std::array<Hermitian3, 3> frame;
  Eigen::Vector3d values = lambda;

  const Vector27 scalar_resid = coords - (e1 / 3.0) * herm_coordinates(one);
  if (scalar_resid.norm() <= 1e-9 * scale) {
    // Scalar multiple of the identity: canonical diagonal frame.
    for (int i = 0; i < 3; ++i) {
      Hermitian3 c;
      c.diag[static_cast<size_t>(i)] = 1.0;
      frame[i] = c;
      values(i) = e1 / 3.0;
    }
  } else {
    // Peel off the most isolated eigenvalue through the quadratic cofactor of
    // the characteristic cubic (exact for any multiplicity pattern of the
    // other two), then diagonalize z on the remaining rank-2 Peirce
    // subalgebra, which resolves even a tiny pair splitting.
    const int single =
        lambda(0) - lambda(1) > lambda(1) - lambda(2) ? 0 : 2;
    double mu_s = lambda(single);
    for (int newton = 0; newton < 3; ++newton) {
      const double p = ((mu_s - e1) * mu_s + e2) * mu_s - e3;
      const double dp = (3.0 * mu_s - 2.0 * e1) * mu_s + e2;
      if (dp != 0.0) mu_s -= p / dp;
    }
    // q(x) = x^2 + a x + b is the cofactor: p(x) = (x - mu_s) q(x).
    const double a = mu_s - e1;
    const double b = e2 + a * mu_s;
    const double denom = (mu_s + a) * mu_s + b;  // q(mu_s) = p'(mu_s)
    if (std::abs(denom) <= 1e-12 * std::max(1.0, scale * scale)) {
      throw NumericalError("albert decomposition: clustered spectrum too degenerate");
    }
    const Hermitian3 c_single = herm_scale(
        herm_add(herm_add(jordan_mult(h, h), herm_scale(h, a)), herm_scale(one, b)),
        1.0 / denom);
    const Hermitian3 c_pair = herm_add(one, herm_scale(c_single, -1.0));
    const double mu_d = (e1 - mu_s) / 2.0;  // pair mean, exact from the trace
    PairSplit split = [&] {
      if (auto s = try_split(c_pair, peirce_project(c_pair, h))) return *s;
      return split_rank2_idempotent(c_pair, mu_d);
    }();
    if (single == 0) {
      frame = {c_single, split.d_hi, split.d_lo};
      values = Eigen::Vector3d(mu_s, split.mu_hi, split.mu_lo);
    } else {
      frame = {split.d_hi, split.d_lo, c_single};
      values = Eigen::Vector3d(split.mu_hi, split.mu_lo, mu_s);
    }
  }

  // Absorb eigenvalue signs into the tripotents and order by magnitude.
  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(values(a)) > std::abs(values(b));
  });
  SpectralDecomposition out;
  out.alphas.resize(3);
  for (int idx = 0; idx < 3; ++idx) {
    const int i = order[idx];
    out.alphas(idx) = std::abs(values(i));
    const double sign = values(i) < 0 ? -1.0 : 1.0;
    out.tripotents.emplace_back(f, herm_scale(frame[i], sign));
  }
  return out;
}

}  // namespace

SpectralDecomposition spectral_decompose(const Element& z) {
  switch (z.factor().kind) {
    case FactorKind::I: return decompose_type_i(z);
    case FactorKind::II: return decompose_youla(z);
    case FactorKind::III: return decompose_takagi(z);
    case FactorKind::IV: return decompose_spin(z);
    case FactorKind::V:
      throw UnsupportedError("decomposition unsupported for factor V (spectral_norm is available)");
    case FactorKind::VI: return decompose_albert(z);
  }
  throw Error("bad factor kind");
}

}  // namespace cartan
