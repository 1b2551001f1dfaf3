#pragma once

#include <random>

#include "cartan/linalg.hpp"
#include "cartan/sweep.hpp"

namespace cartan {

/// Ellipsoid in a complex coordinate space: membership
/// sum_g |<z - c, b_g>|^2 / a_g^2 < 1 with semiaxes a_1 >= ... >= a_n along
/// an orthonormal basis (identity by default).
class Ellipsoid {
 public:
  Ellipsoid(ComplexVector center, Eigen::VectorXd semiaxes);
  Ellipsoid(ComplexVector center, Eigen::VectorXd semiaxes, ComplexMatrix basis);

  int dim() const { return static_cast<int>(semiaxes_.size()); }
  const ComplexVector& center() const { return center_; }
  const Eigen::VectorXd& semiaxes() const { return semiaxes_; }
  const ComplexMatrix& basis() const { return basis_; }

  /// Membership level: < 1 inside, 1 on the boundary.
  double level(const ComplexVector& z) const;
  bool contains(const ComplexVector& z) const { return level(z) < 1.0; }

  /// Inward unit normal at a boundary point.
  ComplexVector inward_normal(const ComplexVector& q) const;

  /// Frame coordinates w_g = <z - c, b_g> and back.
  ComplexVector to_frame(const ComplexVector& z) const;
  ComplexVector from_frame(const ComplexVector& w) const;

  /// Seeded uniform sample of the open ellipsoid / a boundary point.
  ComplexVector sample_interior(std::mt19937_64& rng) const;
  ComplexVector sample_boundary(std::mt19937_64& rng) const;

 private:
  ComplexVector center_;
  Eigen::VectorXd semiaxes_;
  ComplexMatrix basis_;
};

/// Uniform point of the open unit ball of C^n (realified 2n-ball scheme).
ComplexVector sample_complex_ball(int n, std::mt19937_64& rng);

struct OsculatingRadii {
  double r = 0;
  double R = 0;
  bool strict = false;  // false iff the ellipsoid is a ball (r == R)
};

/// Extreme osculating-sphere radii r = a_min^2 / a_max, R = a_max^2 / a_min.
/// For balls this reports (a, a) and flags the strictness edge case.
OsculatingRadii osculating_radii(const Ellipsoid& e);

/// The witness pair used for balls of radius a: (a/2, a).
OsculatingRadii ball_witness_radii(double a);

/// Boundary point q with inner/outer osculating centers q' = q + r n,
/// q'' = q + R n on the inward normal.
struct EllipticityWitness {
  ComplexVector q;
  ComplexVector q_inner;
  ComplexVector q_outer;
  double r = 0;
  double R = 0;
};

/// Builds and sample-checks the witness: B(q', r) in E in B(q'', R).
/// Throws Error if q is off the boundary, NumericalError (with the violating
/// sample) if a sampled inclusion fails.
EllipticityWitness witnesses(const Ellipsoid& e, const ComplexVector& q, double r, double R,
                             int64_t check_samples = 2048, uint64_t seed = 11);

/// Nearest boundary point of an interior point, by the Lagrange-multiplier
/// (secular equation) Newton iteration in the principal frame.
ComplexVector boundary_nearest(const Ellipsoid& e, const ComplexVector& p);

/// Frame for the dilation/Cayley pipeline at a boundary point q with inward
/// unit direction e1 = (q'' - q)/|q'' - q| and probe distance lambda:
/// all maps act on coordinates relative to q.
struct CayleyFrame {
  ComplexVector q;
  ComplexVector e1;
  double lambda = 0;

  static CayleyFrame from_witness(const EllipticityWitness& w, double lambda);

  /// forward: z1/lambda on e1, 1/sqrt(lambda) orthogonally; inverse undoes it.
  ComplexVector dilate(const ComplexVector& z_rel, bool forward) const;
  /// forward: (z1-1)/(z1+1) on e1, sqrt(2)/(z1+1) orthogonally.
  ComplexVector cayley(const ComplexVector& z_rel, bool forward) const;
};

/// Formula-level Cayley transform with e1 = first standard basis vector.
ComplexVector cayley(const ComplexVector& z, bool forward);

/// sqrt(r / (2 (1+r) (1+R))): the uniform squeezing lower bound of the
/// dilation/Cayley construction.
double elliptic_lower_bound(double r, double R);

/// The lambda threshold r / (2 (1 + sqrt(r/(2+2r)))^2) under which the inner
/// inclusion is certified.
double lambda_threshold(double r);

struct CayleyReport {
  double lambda = 0;
  double lambda_threshold = 0;
  double inner_radius = 0;        // sqrt(r / (2 + 2r))
  double outer_radius = 0;        // sqrt(1 + R)
  int64_t samples = 0;
  uint64_t seed = 0;
  int64_t outer_violations = 0;
  int64_t inner_violations = 0;
  double outer_worst_margin = 0;  // max |Phi L z| - outer_radius (<= 0 passing)
  double inner_worst_margin = 0;  // max |pullback - q'| - r (<= 0 passing)
  double probe_image_norm = 0;    // |Phi L (p)| with p the probe point; ~0
  bool pass = false;
  double implied_lower_bound = 0;
};

/// Samples the two inclusions B(0, sqrt(r/(2+2r))) in Phi L(Omega) in
/// B(0, sqrt(1+R)).  Refuses lambda at or above the threshold.
CayleyReport verify_cayley_inclusions(const Ellipsoid& e, const EllipticityWitness& witness,
                                      double lambda, int64_t samples, uint64_t seed,
                                      const SweepPolicy& policy = {});

/// Caratheodory distance from the center of the unit ball: atanh(|v|).
double caratheodory_to_center(const ComplexVector& v);

}  // namespace cartan
