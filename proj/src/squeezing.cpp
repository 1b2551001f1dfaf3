#include "cartan/squeezing.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace cartan {

PolydiscEmbedding canonical_embedding(const FactorDescriptor& factor) {
  return PolydiscEmbedding{factor, canonical_axis_tripotents(factor)};
}

Element polydisc_embed(const PolydiscEmbedding& emb, const ComplexVector& coords) {
  require(static_cast<int>(emb.axis_tripotents.size()) == emb.factor.rank(),
          "embedding must carry rank-many axis tripotents");
  require(coords.size() == static_cast<Eigen::Index>(emb.axis_tripotents.size()),
          "polydisc_embed: arity mismatch");
  Element z = Element::zero(emb.factor);
  for (Eigen::Index k = 0; k < coords.size(); ++k) {
    z += emb.axis_tripotents[static_cast<size_t>(k)] * coords(k);
  }
  return z;
}

std::string SqueezingConstant::exact() const {
  const int total = std::accumulate(ranks.begin(), ranks.end(), 0);
  if (total == 1) return "1";
  return "1/sqrt(" + std::to_string(total) + ")";
}

SqueezingConstant squeezing_constant_irreducible(const FactorDescriptor& factor) {
  const int p = factor.rank();
  return SqueezingConstant{1.0 / std::sqrt(double(p)), true, {p}};
}

SqueezingConstant squeezing_constant_product(const std::vector<int>& ranks) {
  require(!ranks.empty(), "squeezing_constant_product: empty rank list");
  int total = 0;
  for (int p : ranks) {
    require(p >= 1, "squeezing_constant_product: ranks must be positive");
    total += p;
  }
  return SqueezingConstant{1.0 / std::sqrt(double(total)), false, ranks};
}

namespace {

struct SandwichPartial {
  double lower = 0;
  double upper = 0;
  double worst = -1;
  ComplexVector worst_coords;
};

}  // namespace

SandwichCertificate sandwich_verify(const FactorDescriptor& factor, int64_t samples,
                                    uint64_t seed, double tol, const SweepPolicy& policy) {
  require(samples >= 1, "sandwich_verify: need at least one sample");
  const double sqrt_p = std::sqrt(double(factor.rank()));

  auto partials = run_sharded<SandwichPartial>(policy, [&](int shard) {
    SandwichPartial part;
    const auto [begin, end] = shard_range(samples, policy.shards, shard);
    for (int64_t i = begin; i < end; ++i) {
      const Element z =
          random_element(factor, shard_seed(seed, shard) + uint64_t(i - begin), 1.0);
      const double spec = spectral_norm(z);
      const double hil = hilbert_norm(z);
      const double lower = std::max(0.0, spec - hil);
      const double upper = std::max(0.0, hil - sqrt_p * spec);
      part.lower = std::max(part.lower, lower);
      part.upper = std::max(part.upper, upper);
      const double v = std::max(lower, upper);
      if (v > part.worst) {
        part.worst = v;
        part.worst_coords = coordinates(z);
      }
    }
    return part;
  });

  SandwichCertificate cert;
  cert.factor = factor;
  cert.sample_count = samples;
  cert.seed = seed;
  cert.tolerance = tol;
  double worst = -1;
  for (const auto& p : partials) {
    cert.max_lower_violation = std::max(cert.max_lower_violation, p.lower);
    cert.max_upper_violation = std::max(cert.max_upper_violation, p.upper);
    if (p.worst > worst) {
      worst = p.worst;
      cert.worst_sample = p.worst_coords;
    }
  }
  // Equality witnesses.
  const auto axes = canonical_axis_tripotents(factor);
  const Element& e = axes.front();
  cert.witness_tripotent_ratio = hilbert_norm(e) / spectral_norm(e);
  Element frame = Element::zero(factor);
  for (const auto& a : axes) frame += a;
  cert.witness_frame_ratio = hilbert_norm(frame) / spectral_norm(frame);

  cert.pass = cert.max_lower_violation <= tol && cert.max_upper_violation <= tol &&
              std::abs(cert.witness_tripotent_ratio - 1.0) <= tol &&
              std::abs(cert.witness_frame_ratio - sqrt_p) <= tol;
  cert.implied_lower_bound = cert.pass ? 1.0 / sqrt_p : 0.0;
  if (cert.pass) cert.worst_sample.reset();
  return cert;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double squared_norm_checked(const EmbeddingEvaluator& g, const ComplexVector& w) {
  const ComplexVector v = g(w);
  const double n2 = v.squaredNorm();
  if (n2 >= 1.0) {
    throw Error("rho_upper_certificate: |g| >= 1 at a polydisc sample");
  }
  return n2;
}

}  // namespace

AxisEnergyReport rho_upper_certificate(const EmbeddingEvaluator& g, int l, int grid,
                                       double radius, uint64_t seed, int64_t mc_samples,
                                       const SweepPolicy& policy) {
  require(l >= 1, "rho_upper_certificate: need l >= 1");
  require(grid >= 2, "rho_upper_certificate: need grid >= 2");
  require(radius > 0.0 && radius < 1.0, "rho_upper_certificate: radius must be in (0,1)");

  const ComplexVector center = ComplexVector::Zero(l);
  const double center_norm = g(center).norm();
  if (center_norm > 1e-9) {
    throw Error("rho_upper_certificate: embedding is not centered (g(0) != 0)");
  }

  AxisEnergyReport report;
  report.grid_size = grid;
  report.radius = radius;
  report.axis_energies.resize(l);

  // Per-axis circle means, referred to the unit circle.
  for (int j = 0; j < l; ++j) {
    double acc = 0;
    for (int t = 0; t < grid; ++t) {
      ComplexVector w = ComplexVector::Zero(l);
      w(j) = std::polar(radius, kTwoPi * double(t) / double(grid));
      acc += squared_norm_checked(g, w);
    }
    report.axis_energies(j) = acc / double(grid) / (radius * radius);
  }

  // Full-torus mean: tensor grid for l <= 3, seeded Monte Carlo beyond.
  if (l <= 3) {
    int64_t points = 1;
    for (int j = 0; j < l; ++j) points *= grid;
    auto partials = run_sharded<double>(policy, [&](int shard) {
      const auto [begin, end] = shard_range(points, policy.shards, shard);
      double acc = 0;
      for (int64_t idx = begin; idx < end; ++idx) {
        int64_t rest = idx;
        ComplexVector w(l);
        for (int j = 0; j < l; ++j) {
          const int t = static_cast<int>(rest % grid);
          rest /= grid;
          w(j) = std::polar(radius, kTwoPi * double(t) / double(grid));
        }
        acc += squared_norm_checked(g, w);
      }
      return acc;
    });
    double total = 0;
    for (double p : partials) total += p;
    report.total_energy = total / double(points);
  } else {
    struct McPartial {
      double sum = 0;
      double sum_sq = 0;
    };
    auto partials = run_sharded<McPartial>(policy, [&](int shard) {
      std::mt19937_64 rng(shard_seed(seed, shard));
      std::uniform_real_distribution<double> angle(0.0, kTwoPi);
      const auto [begin, end] = shard_range(mc_samples, policy.shards, shard);
      McPartial part;
      for (int64_t i = begin; i < end; ++i) {
        ComplexVector w(l);
        for (int j = 0; j < l; ++j) w(j) = std::polar(radius, angle(rng));
        const double v = squared_norm_checked(g, w);
        part.sum += v;
        part.sum_sq += v * v;
      }
      return part;
    });
    double sum = 0, sum_sq = 0;
    for (const auto& p : partials) {
      sum += p.sum;
      sum_sq += p.sum_sq;
    }
    const double mean = sum / double(mc_samples);
    const double var = std::max(0.0, sum_sq / double(mc_samples) - mean * mean);
    report.total_energy = mean;
    report.mc_samples = mc_samples;
    report.mc_standard_error = std::sqrt(var / double(mc_samples));
  }

  report.rho_upper = std::sqrt(std::max(0.0, report.axis_energies.minCoeff()));
  report.quadrature_tolerance = (1.0 - radius * radius) / (radius * radius) +
                                5.0 * report.mc_standard_error + 1e-9;
  const double axis_sum = report.axis_energies.sum();
  report.chain_ok = axis_sum <= report.total_energy + report.quadrature_tolerance &&
                    report.total_energy <= 1.0 + report.quadrature_tolerance;
  return report;
}

EmbeddingEvaluator canonical_scaled_inclusion(const FactorDescriptor& factor) {
  const PolydiscEmbedding emb = canonical_embedding(factor);
  const double scale = 1.0 / std::sqrt(double(factor.rank()));
  return [emb, scale](const ComplexVector& w) -> ComplexVector {
    return scale * coordinates(polydisc_embed(emb, w));
  };
}

std::vector<AxisEnergyReport> rho_radius_sweep(const EmbeddingEvaluator& g, int l, int grid,
                                               const std::vector<double>& radii, uint64_t seed,
                                               const SweepPolicy& policy) {
  std::vector<AxisEnergyReport> reports;
  reports.reserve(radii.size());
  for (double r : radii) {
    reports.push_back(rho_upper_certificate(g, l, grid, r, seed, 100000, policy));
  }
  return reports;
}

RecenteredEmbedding recenter_embedding(const EmbeddingEvaluator& f,
                                       const ComplexVector& f_at_zk, double epsilon) {
  require(epsilon > 0.0 && epsilon < 1.0, "recenter_embedding: need 0 < epsilon < 1");
  require(f_at_zk.norm() < epsilon, "recenter_embedding: need |f(z_k)| < epsilon");
  ComplexVector center = f_at_zk;
  const double denom = 1.0 + epsilon;
  EmbeddingEvaluator shifted = [f, center, denom](const ComplexVector& w) -> ComplexVector {
    return (f(w) - center) / denom;
  };
  return RecenteredEmbedding{std::move(shifted), epsilon};
}

double interior_ball_bound(double s, double m, double phi_norm, double phi_inv_norm) {
  require(s > 0.0, "interior_ball_bound: s must be positive");
  require(m >= s, "interior_ball_bound: need s <= m");
  require(phi_norm > 0.0 && phi_inv_norm > 0.0, "interior_ball_bound: norms must be positive");
  require(phi_norm * phi_inv_norm >= 1.0 - 1e-12,
          "interior_ball_bound: |phi| |phi^{-1}| >= 1 is violated");
  return s / (m * m * phi_norm * phi_inv_norm);
}

}  // namespace cartan
