#include "cartan/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cartan {

namespace {

constexpr double kBoundaryTol = 1e-10;

}  // namespace

Ellipsoid::Ellipsoid(ComplexVector center, Eigen::VectorXd semiaxes)
    : Ellipsoid(std::move(center), std::move(semiaxes),
                ComplexMatrix()) {}

Ellipsoid::Ellipsoid(ComplexVector center, Eigen::VectorXd semiaxes, ComplexMatrix basis)
    : center_(std::move(center)), semiaxes_(std::move(semiaxes)), basis_(std::move(basis)) {
  const int n = static_cast<int>(semiaxes_.size());
  require(n >= 1, "ellipsoid needs at least one semiaxis");
  require(center_.size() == n, "center dimension does not match semiaxes");
  require(semiaxes_.minCoeff() > 0.0, "semiaxes must be positive");
  if (basis_.size() == 0) basis_ = ComplexMatrix::Identity(n, n);
  require(basis_.rows() == n && basis_.cols() == n, "basis shape mismatch");
  require((basis_.adjoint() * basis_ - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10,
          "basis must be unitary");
  // Keep semiaxes descending, permuting basis columns alongside.
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return semiaxes_(a) > semiaxes_(b); });
  Eigen::VectorXd sorted(n);
  ComplexMatrix cols(n, n);
  for (int i = 0; i < n; ++i) {
    sorted(i) = semiaxes_(order[static_cast<size_t>(i)]);
    cols.col(i) = basis_.col(order[static_cast<size_t>(i)]);
  }
  semiaxes_ = std::move(sorted);
  basis_ = std::move(cols);
}

ComplexVector Ellipsoid::to_frame(const ComplexVector& z) const {
  return basis_.adjoint() * (z - center_);
}

ComplexVector Ellipsoid::from_frame(const ComplexVector& w) const {
  return center_ + basis_ * w;
}

double Ellipsoid::level(const ComplexVector& z) const {
  const ComplexVector w = to_frame(z);
  double acc = 0;
  for (int i = 0; i < dim(); ++i) acc += std::norm(w(i)) / (semiaxes_(i) * semiaxes_(i));
  return acc;
}

ComplexVector Ellipsoid::inward_normal(const ComplexVector& q) const {
  const ComplexVector w = to_frame(q);
  ComplexVector grad(dim());
  for (int i = 0; i < dim(); ++i) grad(i) = w(i) / (semiaxes_(i) * semiaxes_(i));
  const double nrm = grad.norm();
  require(nrm > 0, "inward_normal: point coincides with the center");
  return -(basis_ * grad) / nrm;
}

ComplexVector sample_complex_ball(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  const double nrm = v.norm();
  if (nrm == 0.0) return ComplexVector::Zero(n);
  const double radius = std::pow(unif(rng), 1.0 / (2.0 * n));
  return v * (radius / nrm);
}

ComplexVector Ellipsoid::sample_interior(std::mt19937_64& rng) const {
  const ComplexVector b = sample_complex_ball(dim(), rng);
  ComplexVector w(dim());
  for (int i = 0; i < dim(); ++i) w(i) = b(i) * semiaxes_(i);
  return from_frame(w);
}

ComplexVector Ellipsoid::sample_boundary(std::mt19937_64& rng) const {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector d(dim());
  for (int i = 0; i < dim(); ++i) d(i) = Complex(gauss(rng), gauss(rng));
  if (d.norm() == 0.0) d(0) = 1.0;
  d.normalize();
  ComplexVector w(dim());
  for (int i = 0; i < dim(); ++i) w(i) = d(i) * semiaxes_(i);
  return from_frame(w);
}

OsculatingRadii osculating_radii(const Ellipsoid& e) {
  const double a_max = e.semiaxes().maxCoeff();
  const double a_min = e.semiaxes().minCoeff();
  OsculatingRadii out;
  out.r = a_min * a_min / a_max;
  out.R = a_max * a_max / a_min;
  out.strict = out.R > out.r * (1.0 + 1e-12);
  return out;
}

OsculatingRadii ball_witness_radii(double a) {
  require(a > 0, "ball radius must be positive");
  return OsculatingRadii{a / 2.0, a, true};
}

EllipticityWitness witnesses(const Ellipsoid& e, const ComplexVector& q, double r, double R,
                             int64_t check_samples, uint64_t seed) {
  require(r > 0 && R >= r, "witnesses: need 0 < r <= R");
  if (std::abs(e.level(q) - 1.0) > kBoundaryTol) {
    throw Error("witnesses: q is not on the boundary");
  }
  const ComplexVector n = e.inward_normal(q);
  EllipticityWitness w;
  w.q = q;
  w.q_inner = q + r * n;
  w.q_outer = q + R * n;
  w.r = r;
  w.R = R;

  std::mt19937_64 rng(seed);
  auto describe = [](const ComplexVector& z) {
    std::string s = "[";
    for (Eigen::Index k = 0; k < z.size(); ++k) {
      if (k) s += ", ";
      s += std::to_string(z(k).real()) + (z(k).imag() < 0 ? "-" : "+") +
           std::to_string(std::abs(z(k).imag())) + "i";
    }
    return s + "]";
  };
  for (int64_t i = 0; i < check_samples; ++i) {
    const ComplexVector inner = w.q_inner + r * sample_complex_ball(e.dim(), rng);
    if (e.level(inner) >= 1.0 + 1e-9) {
      throw NumericalError("witnesses: B(q', r) leaves the ellipsoid at sample " +
                           std::to_string(i) + " " + describe(inner) + " (level " +
                           std::to_string(e.level(inner)) + ")");
    }
    const ComplexVector z = e.sample_interior(rng);
    if ((z - w.q_outer).norm() > R + 1e-9) {
      throw NumericalError("witnesses: ellipsoid leaves B(q'', R) at sample " +
                           std::to_string(i) + " " + describe(z) + " (excess " +
                           std::to_string((z - w.q_outer).norm() - R) + ")");
    }
  }
  return w;
}

namespace {

// Secular function g(t) = sum a_i^2 |w_i|^2 / (a_i^2 + t)^2 restricted to the
// coordinates in `support`.
double secular(const Eigen::VectorXd& a, const Eigen::VectorXd& w2, double t,
               const std::vector<int>& support) {
  double acc = 0;
  for (int i : support) {
    const double d = a(i) * a(i) + t;
    acc += a(i) * a(i) * w2(i) / (d * d);
  }
  return acc;
}

}  // namespace

namespace {

// Coordinates of the boundary point with multiplier t on the support axes.
ComplexVector secular_point(const Eigen::VectorXd& a, const ComplexVector& w, double t,
                            const std::vector<int>& support, int n) {
  ComplexVector q = ComplexVector::Zero(n);
  for (int i : support) q(i) = a(i) * a(i) * w(i) / (a(i) * a(i) + t);
  return q;
}

}  // namespace

ComplexVector boundary_nearest(const Ellipsoid& e, const ComplexVector& p) {
  require(e.level(p) < 1.0, "boundary_nearest: p must be an interior point");
  const int n = e.dim();
  const Eigen::VectorXd& a = e.semiaxes();
  const ComplexVector w = e.to_frame(p);
  Eigen::VectorXd w2(n);
  for (int i = 0; i < n; ++i) w2(i) = std::norm(w(i));
  const double scale = std::max(1.0, a.maxCoeff());

  std::vector<int> support;
  std::vector<int> slack;
  for (int i = 0; i < n; ++i) {
    if (w2(i) > 1e-28 * scale * scale) support.push_back(i);
    else slack.push_back(i);
  }

  if (support.empty()) {
    // Center: the smallest-axis vertex (axes sorted descending).
    ComplexVector q = ComplexVector::Zero(n);
    q(n - 1) = a(n - 1);
    return e.from_frame(q);
  }

  double a_min_support = std::numeric_limits<double>::infinity();
  for (int i : support) a_min_support = std::min(a_min_support, a(i));
  const double t_low = -a_min_support * a_min_support;

  ComplexVector best;
  double best_dist = std::numeric_limits<double>::infinity();

  // Candidate: the secular root on the support axes, bracketed between the
  // pole at t_low (g -> +inf) and 0 (g = level < 1), refined by
  // bisection-safeguarded Newton.
  {
    double lo = t_low + (0.0 - t_low) * 1e-14;
    double hi = 0.0;
    for (int guard = 0; guard < 200 && secular(a, w2, lo, support) < 1.0; ++guard) {
      lo = t_low + (lo - t_low) * 1e-2;
    }
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
      const double gv = secular(a, w2, t, support);
      if (gv >= 1.0) lo = t; else hi = t;
      double dg = 0;
      for (int i : support) {
        const double d = a(i) * a(i) + t;
        dg += -2.0 * a(i) * a(i) * w2(i) / (d * d * d);
      }
      double next = t - (gv - 1.0) / dg;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(gv - 1.0) < 1e-15 || hi - lo < 1e-17 * scale * scale) break;
      t = next;
    }
    const ComplexVector q = secular_point(a, w, t, support, n);
    const double d = (e.from_frame(q) - p).norm();
    if (d < best_dist) {
      best_dist = d;
      best = q;
    }
  }

  // Candidates: the multiplier pinned at a zero-coordinate axis, with the
  // membership residual carried by that axis.  Valid only when the pole sits
  // above t_low and the support part stays inside the ellipsoid.
  for (int j : slack) {
    const double t = -a(j) * a(j);
    if (t <= t_low) continue;
    const double gv = secular(a, w2, t, support);
    if (gv >= 1.0) continue;
    ComplexVector q = secular_point(a, w, t, support, n);
    q(j) = a(j) * std::sqrt(1.0 - gv);
    const double d = (e.from_frame(q) - p).norm();
    if (d < best_dist) {
      best_dist = d;
      best = q;
    }
  }

  const ComplexVector qa = e.from_frame(best);
  // Stationarity: p - q must be parallel to the normal at q.
  const ComplexVector diff = p - qa;
  const double dn = diff.norm();
  if (dn > 0) {
    const ComplexVector nrm = e.inward_normal(qa);
    const ComplexVector tangential = diff - nrm * nrm.dot(diff);
    if (tangential.norm() > 1e-10 * std::max(1.0, dn)) {
      throw NumericalError("boundary_nearest: stationarity residual too large");
    }
  }
  return qa;
}

CayleyFrame CayleyFrame::from_witness(const EllipticityWitness& w, double lambda) {
  require(lambda > 0, "CayleyFrame: lambda must be positive (degenerate frame)");
  require(lambda < w.r, "CayleyFrame: probe must lie inside the inner ball");
  CayleyFrame f;
  f.q = w.q;
  f.e1 = (w.q_outer - w.q) / (w.q_outer - w.q).norm();
  f.lambda = lambda;
  return f;
}

ComplexVector CayleyFrame::dilate(const ComplexVector& z_rel, bool forward) const {
  const Complex z1 = e1.dot(z_rel);
  const ComplexVector perp = z_rel - z1 * e1;
  if (forward) {
    return (z1 / lambda) * e1 + perp / std::sqrt(lambda);
  }
  return (lambda * z1) * e1 + std::sqrt(lambda) * perp;
}

namespace {

ComplexVector cayley_in_frame(const ComplexVector& z, const ComplexVector& e1, bool forward) {
  const Complex z1 = e1.dot(z);
  const ComplexVector perp = z - z1 * e1;
  if (forward) {
    const Complex den = z1 + 1.0;
    if (std::abs(den) < 1e-14) throw Error("cayley: pole at z1 = -1");
    return ((z1 - 1.0) / den) * e1 + (std::sqrt(2.0) / den) * perp;
  }
  const Complex den = 1.0 - z1;
  if (std::abs(den) < 1e-14) throw Error("cayley: pole at zeta1 = 1");
  return ((1.0 + z1) / den) * e1 + (std::sqrt(2.0) / den) * perp;
}

}  // namespace

ComplexVector CayleyFrame::cayley(const ComplexVector& z_rel, bool forward) const {
  return cayley_in_frame(z_rel, e1, forward);
}

ComplexVector cayley(const ComplexVector& z, bool forward) {
  ComplexVector e1 = ComplexVector::Zero(z.size());
  e1(0) = 1.0;
  return cayley_in_frame(z, e1, forward);
}

double elliptic_lower_bound(double r, double R) {
  require(r > 0, "elliptic_lower_bound: r must be positive");
  require(R >= r, "elliptic_lower_bound: need r <= R");
  return std::sqrt(r / (2.0 * (1.0 + r) * (1.0 + R)));
}

double lambda_threshold(double r) {
  require(r > 0, "lambda_threshold: r must be positive");
  const double rho = std::sqrt(r / (2.0 + 2.0 * r));
  return r / (2.0 * (1.0 + rho) * (1.0 + rho));
}

CayleyReport verify_cayley_inclusions(const Ellipsoid& e, const EllipticityWitness& witness,
                                      double lambda, int64_t samples, uint64_t seed,
                                      const SweepPolicy& policy) {
  require(samples >= 1, "verify_cayley_inclusions: need samples >= 1");
  require(lambda > 0, "verify_cayley_inclusions: lambda must be positive (degenerate frame)");
  const double threshold = lambda_threshold(witness.r);
  if (lambda >= threshold) {
    throw Error("verify_cayley_inclusions: lambda " + std::to_string(lambda) +
                " is not below the threshold " + std::to_string(threshold));
  }

  const CayleyFrame frame = CayleyFrame::from_witness(witness, lambda);
  CayleyReport report;
  report.lambda = lambda;
  report.lambda_threshold = threshold;
  report.inner_radius = std::sqrt(witness.r / (2.0 + 2.0 * witness.r));
  report.outer_radius = std::sqrt(1.0 + witness.R);
  report.samples = samples;
  report.seed = seed;

  // The probe point lambda e1 must map to the origin.
  report.probe_image_norm = frame.cayley(frame.dilate(lambda * frame.e1, true), true).norm();

  struct Partial {
    int64_t outer_bad = 0;
    int64_t inner_bad = 0;
    double outer_margin = -std::numeric_limits<double>::infinity();
    double inner_margin = -std::numeric_limits<double>::infinity();
  };

  auto partials = run_sharded<Partial>(policy, [&](int shard) {
    Partial part;
    std::mt19937_64 rng(shard_seed(seed, shard));
    const auto [begin, end] = shard_range(samples, policy.shards, shard);
    for (int64_t i = begin; i < end; ++i) {
      // Outer: Omega maps into B(0, sqrt(1+R)).
      const ComplexVector z = e.sample_interior(rng);
      const ComplexVector img = frame.cayley(frame.dilate(z - frame.q, true), true);
      const double outer_margin = img.norm() - report.outer_radius;
      part.outer_margin = std::max(part.outer_margin, outer_margin);
      if (outer_margin > 1e-9) ++part.outer_bad;

      // Inner: the ball of radius sqrt(r/(2+2r)) pulls back into B(q', r).
      const ComplexVector zeta = report.inner_radius * sample_complex_ball(e.dim(), rng);
      const ComplexVector back =
          frame.q + frame.dilate(frame.cayley(zeta, false), false);
      const double inner_margin = (back - witness.q_inner).norm() - witness.r;
      part.inner_margin = std::max(part.inner_margin, inner_margin);
      if (inner_margin > 1e-9) ++part.inner_bad;
    }
    return part;
  });

  report.outer_worst_margin = -std::numeric_limits<double>::infinity();
  report.inner_worst_margin = -std::numeric_limits<double>::infinity();
  for (const auto& p : partials) {
    report.outer_violations += p.outer_bad;
    report.inner_violations += p.inner_bad;
    report.outer_worst_margin = std::max(report.outer_worst_margin, p.outer_margin);
    report.inner_worst_margin = std::max(report.inner_worst_margin, p.inner_margin);
  }
  report.pass = report.outer_violations == 0 && report.inner_violations == 0 &&
                report.probe_image_norm <= 1e-9;
  report.implied_lower_bound = elliptic_lower_bound(witness.r, witness.R);
  return report;
}

double caratheodory_to_center(const ComplexVector& v) {
  const double nrm = v.norm();
  if (nrm > 1.0 - 1e-12) {
    throw Error("caratheodory_to_center: |v| must stay below 1 - 1e-12");
  }
  return std::atanh(nrm);
}

}  // namespace cartan
