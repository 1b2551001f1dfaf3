#pragma once

#include <functional>
#include <optional>

#include "cartan/spectral.hpp"
#include "cartan/sweep.hpp"

namespace cartan {

/// rank-many mutually orthogonal minimal tripotents spanning a maximal
/// polydisc: (z_1, ..., z_l) -> sum z_k e_k.
struct PolydiscEmbedding {
  FactorDescriptor factor;
  std::vector<Element> axis_tripotents;
};

PolydiscEmbedding canonical_embedding(const FactorDescriptor& factor);

/// sum coords[k] * axis_tripotents[k]; maps the closed polydisc into the
/// closed unit ball, boundary to boundary.
Element polydisc_embed(const PolydiscEmbedding& emb, const ComplexVector& coords);

struct SqueezingConstant {
  double value;
  bool irreducible;        // false for products
  std::vector<int> ranks;  // one entry when irreducible
  std::string exact() const;
};

SqueezingConstant squeezing_constant_irreducible(const FactorDescriptor& factor);
SqueezingConstant squeezing_constant_product(const std::vector<int>& ranks);

/// Two-sided norm sandwich |z| <= |z|_h <= sqrt(p) |z| sampled at `samples`
/// seeded points, plus the equality witnesses (a single minimal tripotent,
/// ratio 1; the sum of all axis tripotents, ratio sqrt(p)).
struct SandwichCertificate {
  FactorDescriptor factor;
  int64_t sample_count = 0;
  uint64_t seed = 0;
  double tolerance = 0;
  double max_lower_violation = 0;  // max over samples of (|z| - |z|_h)+
  double max_upper_violation = 0;  // max over samples of (|z|_h - sqrt(p)|z|)+
  double witness_tripotent_ratio = 0;  // -> 1
  double witness_frame_ratio = 0;      // -> sqrt(p)
  bool pass = false;
  double implied_lower_bound = 0;  // 1/sqrt(p) when passing
  std::optional<ComplexVector> worst_sample;  // coordinates, set on violation
};

SandwichCertificate sandwich_verify(const FactorDescriptor& factor, int64_t samples,
                                    uint64_t seed, double tol = 1e-8,
                                    const SweepPolicy& policy = {});

/// Torus-quadrature certificate for the Fourier-energy upper bound: for a
/// centered embedding g of the l-polydisc into a Hilbert ball, any rho with
/// rho B contained in the image satisfies l rho^2 <= 1.
struct AxisEnergyReport {
  Eigen::VectorXd axis_energies;  // per-axis Parseval sums, referred to r = 1
  double total_energy = 0;        // mean of |g|^2 over the full torus grid
  double rho_upper = 0;           // sqrt(min axis energy)
  int grid_size = 0;
  double radius = 0;
  int64_t mc_samples = 0;         // 0 when the tensor grid was used
  double mc_standard_error = 0;
  double quadrature_tolerance = 0;
  bool chain_ok = false;  // sum(axis) <= total + qtol and total <= 1 + qtol
};

using EmbeddingEvaluator = std::function<ComplexVector(const ComplexVector&)>;

AxisEnergyReport rho_upper_certificate(const EmbeddingEvaluator& g, int l, int grid,
                                       double radius, uint64_t seed = 2024,
                                       int64_t mc_samples = 100000,
                                       const SweepPolicy& policy = {});

/// g = coordinates(polydisc_embed(...)) / sqrt(rank): the scaled inclusion
/// whose axis energies are exactly 1/rank.
EmbeddingEvaluator canonical_scaled_inclusion(const FactorDescriptor& factor);

/// Reports at a ladder of radii approaching 1, exhibiting the r -> 1 limit.
std::vector<AxisEnergyReport> rho_radius_sweep(const EmbeddingEvaluator& g, int l, int grid,
                                               const std::vector<double>& radii,
                                               uint64_t seed = 2024,
                                               const SweepPolicy& policy = {});

/// Recentering transform: omega -> (f(omega) - f_at_zk)/(1 + epsilon); if
/// rho B was inside the image of f, (rho - eps)/(1 + eps) B is inside the
/// image of the result.
struct RecenteredEmbedding {
  EmbeddingEvaluator evaluate;
  double epsilon;
  double certified_radius(double rho) const { return (rho - epsilon) / (1.0 + epsilon); }
};

RecenteredEmbedding recenter_embedding(const EmbeddingEvaluator& f,
                                       const ComplexVector& f_at_zk, double epsilon);

/// s / (m^2 |phi| |phi^{-1}|): lower bound for the squeezing function at q
/// whenever B(q,s) is inside the domain, which is inside B(q,m).
double interior_ball_bound(double s, double m, double phi_norm, double phi_inv_norm);

}  // namespace cartan
