#include <doctest.h>

#include <random>

#include "cartan/elliptic.hpp"

using namespace cartan;

namespace {

Ellipsoid make_ellipsoid(std::initializer_list<double> axes) {
  Eigen::VectorXd a(static_cast<Eigen::Index>(axes.size()));
  int i = 0;
  for (double v : axes) a(i++) = v;
  return Ellipsoid(ComplexVector::Zero(a.size()), a);
}

// Independent nearest-point oracle: best of a coarse boundary sample, then a
// shrinking random pattern search with radial re-projection onto the
// boundary.
ComplexVector nearest_oracle(const Ellipsoid& e, const ComplexVector& p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  auto project = [&](const ComplexVector& z) {
    ComplexVector w = e.to_frame(z);
    const double lvl = e.level(z);
    w /= std::sqrt(lvl);
    return e.from_frame(w);
  };

  ComplexVector best = e.sample_boundary(rng);
  double best_d = (best - p).norm();
  for (int i = 0; i < 20000; ++i) {
    const ComplexVector q = e.sample_boundary(rng);
    const double d = (q - p).norm();
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  double scale = 0.1;
  for (int round = 0; round < 120; ++round) {
    bool improved = false;
    for (int k = 0; k < 64; ++k) {
      ComplexVector cand = best;
      for (int j = 0; j < e.dim(); ++j) cand(j) += scale * Complex(g(rng), g(rng));
      cand = project(cand);
      const double d = (cand - p).norm();
      if (d < best_d) {
        best_d = d;
        best = cand;
        improved = true;
      }
    }
    if (!improved) scale *= 0.6;
    if (scale < 1e-10) break;
  }
  return best;
}

}  // namespace

TEST_CASE("ellipsoid basics") {
  const Ellipsoid e = make_ellipsoid({0.8, 1.0, 0.6});
  CHECK(e.semiaxes()(0) == 1.0);  // sorted descending, basis columns permuted
  CHECK(e.semiaxes()(2) == 0.6);
  CHECK(e.contains(ComplexVector::Zero(3)));
  const ComplexVector q = e.basis().col(0);  // largest-axis vertex
  CHECK(e.level(q) == doctest::Approx(1.0));

  CHECK_THROWS_AS(make_ellipsoid({1.0, 0.0}), Error);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) CHECK(e.level(e.sample_interior(rng)) < 1.0);
  for (int i = 0; i < 200; ++i) CHECK(e.level(e.sample_boundary(rng)) == doctest::Approx(1.0));
}

TEST_CASE("osculating radii") {
  const auto ball = osculating_radii(make_ellipsoid({2.0, 2.0, 2.0}));
  CHECK(ball.r == doctest::Approx(2.0));
  CHECK(ball.R == doctest::Approx(2.0));
  CHECK_FALSE(ball.strict);

  const auto osc = osculating_radii(make_ellipsoid({1.0, 0.8, 0.6}));
  CHECK(osc.r == doctest::Approx(0.36));
  CHECK(osc.R == doctest::Approx(5.0 / 3.0).epsilon(1e-7));
  CHECK(osc.strict);

  const auto bw = ball_witness_radii(1.0);
  CHECK(bw.r == 0.5);
  CHECK(bw.R == 1.0);
}

TEST_CASE("unit ball witnesses: half-radius center pair") {
  const Ellipsoid ball = make_ellipsoid({1.0, 1.0, 1.0});
  std::mt19937_64 rng(9);
  const ComplexVector q = ball.sample_boundary(rng);
  const auto w = witnesses(ball, q, 0.5, 1.0, 512, 3);
  CHECK((w.q_inner - ComplexVector(0.5 * q)).norm() < 1e-12);
  CHECK(w.q_outer.norm() < 1e-12);

  // q, q', q'' colinear by construction
  const ComplexVector d1 = w.q_inner - w.q;
  const ComplexVector d2 = w.q_outer - w.q;
  CHECK((d1 / d1.norm() - d2 / d2.norm()).norm() < 1e-12);

  CHECK_THROWS_AS(witnesses(ball, ComplexVector(0.5 * q), 0.5, 1.0), Error);
}

TEST_CASE("witnesses on an ellipsoid long-axis vertex stay on the axis") {
  const Ellipsoid e = make_ellipsoid({1.0, 0.8});
  const auto osc = osculating_radii(e);
  ComplexVector q = ComplexVector::Zero(2);
  q(0) = 1.0;
  const auto w = witnesses(e, q, osc.r, osc.R, 2048, 4);
  CHECK(std::abs(w.q_inner(1)) < 1e-12);
  CHECK(std::abs(w.q_outer(1)) < 1e-12);
  CHECK(std::abs(w.q_inner(0).real() - (1.0 - osc.r)) < 1e-12);
  CHECK(std::abs(w.q_outer(0).real() - (1.0 - osc.R)) < 1e-12);
}

TEST_CASE("witness sampling catches an invalid inner radius") {
  const Ellipsoid e = make_ellipsoid({1.0, 0.8});
  ComplexVector q = ComplexVector::Zero(2);
  q(0) = 1.0;
  // r beyond the osculating radius: the inner ball pokes out near the vertex
  CHECK_THROWS_AS(witnesses(e, q, 0.9, 2.0, 4096, 4), NumericalError);
}

TEST_CASE("nearest boundary point: radial and on-axis cases") {
  const Ellipsoid ball = make_ellipsoid({1.0, 1.0, 1.0});
  ComplexVector u(3);
  u << Complex(0.0, 0.6), Complex(0.8, 0.0), Complex(0.0, 0.0);
  const ComplexVector q = boundary_nearest(ball, ComplexVector(0.3 * u));
  CHECK((q - u).norm() < 1e-10);

  const Ellipsoid e = make_ellipsoid({2.0, 1.0});
  ComplexVector p = ComplexVector::Zero(2);
  p(1) = 0.5;
  const ComplexVector v = boundary_nearest(e, p);
  CHECK(std::abs(v(0)) < 1e-12);
  CHECK(std::abs(v(1).real() - 1.0) < 1e-12);

  // beyond the evolute cusp the nearest point leaves the long axis
  ComplexVector inner = ComplexVector::Zero(2);
  inner(0) = 1.2;
  const ComplexVector qn = boundary_nearest(e, inner);
  CHECK((qn - inner).norm() == doctest::Approx(std::sqrt(0.52)).epsilon(1e-10));

  // center of a ball: deterministic vertex at distance a_min
  const ComplexVector c = boundary_nearest(e, ComplexVector::Zero(2));
  CHECK((c - ComplexVector::Zero(2)).norm() == doctest::Approx(1.0));
}

TEST_CASE("nearest boundary point matches the descent oracle") {
  std::mt19937_64 rng(33);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    Eigen::VectorXd axes(2);
    axes << 1.0 + 0.5 * std::abs(g(rng)), 0.4 + 0.3 * std::abs(g(rng));
    Ellipsoid e(ComplexVector::Zero(2), axes);
    ComplexVector p;
    do {
      p = e.sample_interior(rng);
    } while (e.level(p) > 0.95);
    const ComplexVector q = boundary_nearest(e, p);
    const ComplexVector o = nearest_oracle(e, p, 100 + trial);
    CHECK(std::abs((q - p).norm() - (o - p).norm()) < 1e-6);
    CHECK((q - p).norm() <= (o - p).norm() + 1e-10);
  }
}

TEST_CASE("dilation") {
  EllipticityWitness w;
  w.q = ComplexVector::Zero(3);
  w.q_inner = ComplexVector::Zero(3);
  w.q_outer = ComplexVector::Zero(3);
  w.q_inner(0) = 0.5;
  w.q_outer(0) = 1.0;
  w.r = 0.5;
  w.R = 1.0;
  const auto frame = CayleyFrame::from_witness(w, 0.25);

  ComplexVector z = ComplexVector::Zero(3);
  z(0) = 0.25;
  z(1) = 0.5;
  const ComplexVector img = frame.dilate(z, true);
  CHECK(std::abs(img(0) - Complex(1.0)) < 1e-14);
  CHECK(std::abs(img(1) - Complex(1.0)) < 1e-14);

  CHECK(frame.dilate(ComplexVector::Zero(3), true).norm() == 0.0);

  std::mt19937_64 rng(6);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    ComplexVector v(3);
    for (int k = 0; k < 3; ++k) v(k) = Complex(g(rng), g(rng));
    CHECK((frame.dilate(frame.dilate(v, true), false) - v).norm() < 1e-12 * v.norm());
  }

  CHECK_THROWS_AS(CayleyFrame::from_witness(w, 0.0), Error);
  CHECK_THROWS_AS(CayleyFrame::from_witness(w, 0.6), Error);
}

TEST_CASE("cayley transform") {
  ComplexVector e1 = ComplexVector::Zero(3);
  e1(0) = 1.0;
  CHECK(cayley(e1, true).norm() < 1e-15);

  CHECK((cayley(ComplexVector(3.0 * e1), true) - ComplexVector(0.5 * e1)).norm() < 1e-15);

  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    ComplexVector v(3);
    for (int k = 0; k < 3; ++k) v(k) = Complex(g(rng), g(rng));
    v(0) = Complex(0.5 + std::abs(v(0).real()), v(0).imag());  // Re z1 > 0
    CHECK((cayley(cayley(v, true), false) - v).norm() < 1e-12 * (1.0 + v.norm()));
  }

  ComplexVector pole = ComplexVector::Zero(2);
  pole(0) = -1.0;
  CHECK_THROWS_AS(cayley(pole, true), Error);
  ComplexVector pole2 = ComplexVector::Zero(2);
  pole2(0) = 1.0;
  CHECK_THROWS_AS(cayley(pole2, false), Error);
}

TEST_CASE("elliptic lower bound formula") {
  CHECK(elliptic_lower_bound(0.5, 1.0) == doctest::Approx(std::sqrt(1.0 / 12.0)).epsilon(1e-12));
  CHECK(elliptic_lower_bound(0.5, 1.0) == doctest::Approx(0.2886751).epsilon(1e-7));
  CHECK(elliptic_lower_bound(1.0, 1.0) == doctest::Approx(std::sqrt(0.125)).epsilon(1e-12));
  CHECK(elliptic_lower_bound(1e-9, 1.0) < 1e-4);
  CHECK(elliptic_lower_bound(0.36, 5.0 / 3.0) == doctest::Approx(0.2227832).epsilon(1e-6));
  CHECK_THROWS_AS(elliptic_lower_bound(0.0, 1.0), Error);
  CHECK_THROWS_AS(elliptic_lower_bound(2.0, 1.0), Error);
  for (double r : {0.1, 0.5, 1.0}) {
    for (double R : {1.0, 2.0, 5.0}) {
      if (R >= r) CHECK(elliptic_lower_bound(r, R) < 1.0);
    }
  }
}

TEST_CASE("cayley inclusion verification on the unit ball") {
  const Ellipsoid ball = make_ellipsoid({1.0, 1.0, 1.0});
  const auto rr = ball_witness_radii(1.0);
  ComplexVector q = ComplexVector::Zero(3);
  q(0) = 1.0;
  const auto w = witnesses(ball, q, rr.r, rr.R, 512, 11);
  const double threshold = lambda_threshold(rr.r);

  const auto rep = verify_cayley_inclusions(ball, w, threshold / 2, 3000, 11);
  CHECK(rep.pass);
  CHECK(rep.outer_violations == 0);
  CHECK(rep.inner_violations == 0);
  CHECK(rep.probe_image_norm < 1e-12);
  CHECK(rep.implied_lower_bound == doctest::Approx(0.2886751).epsilon(1e-7));

  CHECK_THROWS_AS(verify_cayley_inclusions(ball, w, 0.0, 100, 1), Error);
  CHECK_THROWS_AS(verify_cayley_inclusions(ball, w, threshold, 100, 1), Error);
}

TEST_CASE("rotated ellipsoids: non-identity unitary basis") {
  // rotate the principal axes by a unitary and check frame round trips,
  // membership and the full witness/cayley pipeline
  ComplexMatrix u(2, 2);
  const double c = std::cos(0.7), s = std::sin(0.7);
  u << Complex(c, 0), Complex(-s, 0), Complex(s * 0.6, s * 0.8), Complex(c * 0.6, c * 0.8);
  Eigen::VectorXd axes(2);
  axes << 1.0, 0.5;
  ComplexVector center(2);
  center << Complex(0.2, -0.1), Complex(0, 0.3);
  const Ellipsoid e(center, axes, u);

  std::mt19937_64 rng(55);
  for (int i = 0; i < 100; ++i) {
    const ComplexVector z = e.sample_interior(rng);
    CHECK(e.level(z) < 1.0);
    CHECK((e.from_frame(e.to_frame(z)) - z).norm() < 1e-12);
  }

  const ComplexVector q = center + axes(0) * e.basis().col(0);
  CHECK(e.level(q) == doctest::Approx(1.0));
  const auto osc = osculating_radii(e);
  const auto w = witnesses(e, q, osc.r, osc.R, 1024, 21);
  const auto rep = verify_cayley_inclusions(e, w, lambda_threshold(osc.r) / 2, 2000, 21);
  CHECK(rep.pass);

  const ComplexVector p = center + 0.3 * e.basis().col(1);
  const ComplexVector nearest = boundary_nearest(e, p);
  CHECK(e.level(nearest) == doctest::Approx(1.0));

  CHECK_THROWS_AS(Ellipsoid(center, axes, ComplexMatrix(2.0 * u)), Error);
}

TEST_CASE("the pipeline accepts the non-strict ball radii r = R") {
  const Ellipsoid ball = make_ellipsoid({1.0, 1.0});
  const auto osc = osculating_radii(ball);
  CHECK(osc.r == osc.R);
  CHECK_FALSE(osc.strict);
  ComplexVector q = ComplexVector::Zero(2);
  q(0) = 1.0;
  const auto w = witnesses(ball, q, osc.r, osc.R, 512, 19);
  const auto rep = verify_cayley_inclusions(ball, w, lambda_threshold(osc.r) / 2, 2000, 19);
  CHECK(rep.pass);
}

TEST_CASE("cayley pipeline is injective on samples and colinear probes") {
  const Ellipsoid e = make_ellipsoid({1.0, 0.8, 0.6});
  const auto osc = osculating_radii(e);
  ComplexVector q = ComplexVector::Zero(3);
  q(0) = 1.0;
  const auto w = witnesses(e, q, osc.r, osc.R, 512, 13);
  const double lambda = lambda_threshold(osc.r) / 4;
  const auto frame = CayleyFrame::from_witness(w, lambda);

  // (p, q, q'') colinear for p = q + lambda e1
  const ComplexVector p = frame.q + lambda * frame.e1;
  const ComplexVector d1 = p - w.q;
  const ComplexVector d2 = w.q_outer - w.q;
  CHECK((d1 / d1.norm() - d2 / d2.norm()).norm() < 1e-12);

  std::mt19937_64 rng(14);
  std::vector<ComplexVector> images;
  for (int i = 0; i < 60; ++i) {
    const ComplexVector z = e.sample_interior(rng);
    images.push_back(frame.cayley(frame.dilate(z - frame.q, true), true));
  }
  for (size_t i = 0; i < images.size(); ++i) {
    for (size_t j = i + 1; j < images.size(); ++j) {
      CHECK((images[i] - images[j]).norm() > 1e-12);
    }
  }
}

TEST_CASE("caratheodory distance to the center") {
  CHECK(caratheodory_to_center(ComplexVector::Zero(4)) == 0.0);
  ComplexVector v = ComplexVector::Zero(2);
  v(0) = Complex(0.3, 0.4);  // norm 0.5
  CHECK(caratheodory_to_center(v) == doctest::Approx(0.5493061).epsilon(1e-7));

  // strictly increasing in the norm
  double prev = 0;
  for (double t : {0.1, 0.4, 0.7, 0.95}) {
    ComplexVector u = ComplexVector::Zero(2);
    u(0) = t;
    const double c = caratheodory_to_center(u);
    CHECK(c > prev);
    prev = c;
  }

  ComplexVector edge = ComplexVector::Zero(2);
  edge(0) = 1.0;
  CHECK_THROWS_AS(caratheodory_to_center(edge), Error);
  edge(0) = 1.0 - 1e-13;
  CHECK_THROWS_AS(caratheodory_to_center(edge), Error);
}
