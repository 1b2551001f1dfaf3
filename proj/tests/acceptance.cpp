// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exit code = number of failed criteria.
//
// Usage: acceptance [--cli /path/to/cartan_squeeze]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cartan/albert.hpp"
#include "cartan/elliptic.hpp"
#include "cartan/serialize.hpp"
#include "cartan/spectral.hpp"
#include "cartan/squeezing.hpp"

using namespace cartan;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

bool g_verbose = true;

#define EXPECT(cond, what)                                         \
  do {                                                             \
    if (!(cond)) {                                                 \
      ok = false;                                                  \
      if (g_verbose) std::printf("    violated: %s\n", what);      \
    }                                                              \
  } while (0)

std::vector<FactorDescriptor> criterion_factors() {
  return {FactorDescriptor::type_i(1, 7), FactorDescriptor::type_i(2, 5),
          FactorDescriptor::type_i(3, 4), FactorDescriptor::type_ii(6),
          FactorDescriptor::type_iii(3),  FactorDescriptor::type_iv(3),
          FactorDescriptor::type_iv(8),   FactorDescriptor::type_iv(16),
          FactorDescriptor::type_v(),     FactorDescriptor::type_vi()};
}

// 1. Constant table: sigma = 1/sqrt(p) closed form, 7-digit decimals, the
//    product rule, all under a second.
bool criterion_constants() {
  Timer t;
  bool ok = true;
  for (const auto& f : criterion_factors()) {
    const auto c = squeezing_constant_irreducible(f);
    EXPECT(c.value == 1.0 / std::sqrt(double(f.rank())), "closed form is exact");
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.7f",
                squeezing_constant_irreducible(FactorDescriptor::type_v()).value);
  EXPECT(std::string(buf) == "0.7071068", "1/sqrt(2) to 7 digits");
  std::snprintf(buf, sizeof(buf), "%.7f",
                squeezing_constant_irreducible(FactorDescriptor::type_vi()).value);
  EXPECT(std::string(buf) == "0.5773503", "1/sqrt(3) to 7 digits");
  std::snprintf(buf, sizeof(buf), "%.7f", squeezing_constant_product({2, 3}).value);
  EXPECT(std::string(buf) == "0.4472136", "product [2,3] to 7 digits");
  const double sec = t.seconds();
  EXPECT(sec < 1.0, "runtime under 1 s");
  std::printf("[%s] criterion 1: constant table (%.2f s)\n", ok ? "PASS" : "FAIL", sec);
  return ok;
}

// 2. Two-sided certification: sandwich at 1e4 samples plus the rho
//    certificate at grid 64, radius 1 - 1e-6, under 60 s total.
bool criterion_certification() {
  Timer t;
  bool ok = true;
  for (const auto& f : criterion_factors()) {
    const auto cert = sandwich_verify(f, 10000, 7, 1e-8);
    EXPECT(cert.pass, (f.name() + ": sandwich pass").c_str());
    EXPECT(cert.max_lower_violation <= 1e-8, (f.name() + ": lower violations").c_str());
    EXPECT(cert.max_upper_violation <= 1e-8, (f.name() + ": upper violations").c_str());
    EXPECT(std::abs(cert.witness_tripotent_ratio - 1.0) <= 1e-8,
           (f.name() + ": tripotent witness ratio 1").c_str());
    EXPECT(std::abs(cert.witness_frame_ratio - std::sqrt(double(f.rank()))) <= 1e-8,
           (f.name() + ": frame witness ratio sqrt(p)").c_str());

    const auto rho =
        rho_upper_certificate(canonical_scaled_inclusion(f), f.rank(), 64, 1.0 - 1e-6, 7);
    EXPECT(std::abs(rho.rho_upper - 1.0 / std::sqrt(double(f.rank()))) <= 1e-9,
           (f.name() + ": rho upper = 1/sqrt(rank)").c_str());
    EXPECT(rho.chain_ok, (f.name() + ": parseval chain").c_str());
  }
  const double sec = t.seconds();
  EXPECT(sec < 60.0, "runtime under 60 s");
  std::printf("[%s] criterion 2: two-sided certification (%.1f s)\n", ok ? "PASS" : "FAIL", sec);
  return ok;
}

// 3. JB*-triple axiom suite on all six types.
bool criterion_axioms() {
  Timer t;
  bool ok = true;
  const std::vector<FactorDescriptor> types = {
      FactorDescriptor::type_i(2, 3), FactorDescriptor::type_ii(6),
      FactorDescriptor::type_iii(3),  FactorDescriptor::type_iv(8),
      FactorDescriptor::type_v(),     FactorDescriptor::type_vi()};
  for (const auto& f : types) {
    struct Partial {
      double jordan = 0;
      double cstar = 0;
    };
    const SweepPolicy policy{64, true};
    auto partials = run_sharded<Partial>(policy, [&](int shard) {
      Partial part;
      const auto [begin, end] = shard_range(1000, policy.shards, shard);
      for (int64_t i = begin; i < end; ++i) {
        const uint64_t s = shard_seed(90, shard) + 16 * uint64_t(i - begin);
        const Element u = random_element(f, s + 0, 1.0);
        const Element v = random_element(f, s + 1, 1.0);
        const Element x = random_element(f, s + 2, 1.0);
        const Element y = random_element(f, s + 3, 1.0);
        const Element z = random_element(f, s + 4, 1.0);
        const Element lhs = triple_product(u, v, triple_product(x, y, z));
        const Element rhs = triple_product(triple_product(u, v, x), y, z) -
                            triple_product(x, triple_product(v, u, y), z) +
                            triple_product(x, y, triple_product(u, v, z));
        part.jordan = std::max(part.jordan, (coordinates(lhs) - coordinates(rhs)).norm());
        if (i % 10 == 0) {  // the cube law needs two spectral radii per check
          const double n = spectral_norm(z);
          if (n > 1e-6) {
            const double cube = spectral_norm(triple_product(z, z, z));
            part.cstar = std::max(part.cstar, std::abs(cube - n * n * n) / (n * n * n));
          }
        }
      }
      return part;
    });
    double jordan = 0, cstar = 0;
    for (const auto& p : partials) {
      jordan = std::max(jordan, p.jordan);
      cstar = std::max(cstar, p.cstar);
    }
    EXPECT(jordan < 1e-10, (f.name() + ": jordan identity residual").c_str());
    EXPECT(cstar < 1e-7, (f.name() + ": |{z,z,z}| = |z|^3").c_str());

    const auto axes = canonical_axis_tripotents(f);
    const double ab = box_operator_matrix(axes[0], axes[1]).cwiseAbs().maxCoeff();
    const double ba = box_operator_matrix(axes[1], axes[0]).cwiseAbs().maxCoeff();
    EXPECT(ab <= 1e-12 && ba <= 1e-12, (f.name() + ": a box b = 0 = b box a").c_str());
    const double aa = box_operator_matrix(axes[0], axes[0]).cwiseAbs().maxCoeff();
    EXPECT(aa > 1e-3, (f.name() + ": non-orthogonal pair has nonzero boxes").c_str());
  }
  const double sec = t.seconds();
  EXPECT(sec < 120.0, "runtime under 120 s");
  std::printf("[%s] criterion 3: jb*-triple axiom suite (%.1f s)\n", ok ? "PASS" : "FAIL", sec);
  return ok;
}

// 4. Spectral decomposition residuals on 1e3 random elements per class.
bool criterion_spectral() {
  Timer t;
  bool ok = true;
  const std::vector<FactorDescriptor> classes = {
      FactorDescriptor::type_i(3, 4), FactorDescriptor::type_ii(6),
      FactorDescriptor::type_iii(3), FactorDescriptor::type_iv(8)};
  for (const auto& f : classes) {
    double recon = 0, trip = 0, alpha_err = 0, svd_err = 0;
    for (uint64_t i = 0; i < 1000; ++i) {
      const Element z = random_element(f, 7000 + i, 2.0);
      const auto d = spectral_decompose(z);
      recon = std::max(recon, (coordinates(d.reconstruct()) - coordinates(z)).norm());
      for (const auto& e : d.tripotents) {
        trip = std::max(trip,
                        (coordinates(triple_product(e, e, e)) - coordinates(e)).norm());
      }
      alpha_err = std::max(alpha_err, std::abs(d.alphas(0) - spectral_norm(z)));
      if (f.kind == FactorKind::I) {
        svd_err = std::max(svd_err,
                           std::abs(d.alphas(0) - svd(z.matrix()).singular_values(0)));
      }
    }
    EXPECT(recon < 1e-8, (f.name() + ": reconstruction residual").c_str());
    EXPECT(trip < 1e-9, (f.name() + ": tripotent residual").c_str());
    EXPECT(alpha_err < 1e-8, (f.name() + ": alpha1 vs spectral norm").c_str());
    if (f.kind == FactorKind::I) EXPECT(svd_err < 1e-10, "type I vs the svd oracle");
  }
  // type VI on the self-adjoint real class
  {
    std::mt19937_64 rng(7100);
    std::normal_distribution<double> g(0.0, 1.0);
    const auto f = FactorDescriptor::type_vi();
    double recon = 0, trip = 0, alpha_err = 0;
    for (int i = 0; i < 1000; ++i) {
      Hermitian3 h;
      for (int k = 0; k < 3; ++k) h.diag[static_cast<size_t>(k)] = g(rng);
      for (int s = 0; s < 3; ++s)
        for (int m = 0; m < 8; ++m) h.off[static_cast<size_t>(s)][m] = g(rng);
      const Element z(f, h);
      const auto d = spectral_decompose(z);
      recon = std::max(recon, (coordinates(d.reconstruct()) - coordinates(z)).norm());
      for (const auto& e : d.tripotents) {
        trip = std::max(trip,
                        (coordinates(triple_product(e, e, e)) - coordinates(e)).norm());
      }
      alpha_err = std::max(alpha_err, std::abs(d.alphas(0) - spectral_norm(z)));
    }
    EXPECT(recon < 1e-8, "VI: reconstruction residual");
    EXPECT(trip < 1e-9, "VI: tripotent residual");
    EXPECT(alpha_err < 1e-8, "VI: alpha1 vs spectral norm");
  }
  std::printf("[%s] criterion 4: spectral decomposition (%.1f s)\n", ok ? "PASS" : "FAIL",
              t.seconds());
  return ok;
}

// 5. Exceptional inner product via (1/18) Trace D.
bool criterion_inner_product() {
  Timer t;
  bool ok = true;
  const auto vi = FactorDescriptor::type_vi();
  const auto axes = canonical_axis_tripotents(vi);
  for (int j = 0; j < 3; ++j) {
    const Complex jj = trace_inner_product(axes[static_cast<size_t>(j)],
                                           axes[static_cast<size_t>(j)]);
    EXPECT(std::abs(jj - Complex(1, 0)) <= 1e-10, "<e_jj, e_jj> = 1");
  }
  EXPECT(std::abs(trace_inner_product(axes[0], axes[1])) <= 1e-10, "<e_11, e_22> = 0");
  std::printf("[%s] criterion 5: exceptional inner product (%.2f s)\n", ok ? "PASS" : "FAIL",
              t.seconds());
  return ok;
}

// 6. Elliptic pipeline on the unit ball and the (1, 0.8, 0.6) ellipsoid.
bool criterion_elliptic() {
  Timer t;
  bool ok = true;

  const Ellipsoid ball(ComplexVector::Zero(3), Eigen::VectorXd::Constant(3, 1.0));
  const auto rr = ball_witness_radii(1.0);
  EXPECT(rr.r == 0.5 && rr.R == 1.0, "ball witness pair (1/2, 1)");
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.7f", elliptic_lower_bound(rr.r, rr.R));
  EXPECT(std::string(buf) == "0.2886751", "ball bound sqrt(1/12)");

  const ComplexVector q = ball.basis().col(0);
  const auto w = witnesses(ball, q, rr.r, rr.R, 10000, 11);
  const double threshold = lambda_threshold(rr.r);
  for (double div : {2.0, 4.0, 8.0}) {
    const auto rep = verify_cayley_inclusions(ball, w, threshold / div, 10000, 11);
    EXPECT(rep.pass && rep.outer_violations == 0 && rep.inner_violations == 0,
           "ball inclusions pass");
  }

  Eigen::VectorXd axes(3);
  axes << 1.0, 0.8, 0.6;
  const Ellipsoid ell(ComplexVector::Zero(3), axes);
  const auto osc = osculating_radii(ell);
  EXPECT(std::abs(osc.r - 0.36) <= 1e-12, "ellipsoid r = 0.36");
  EXPECT(std::abs(osc.R - 5.0 / 3.0) <= 1e-12, "ellipsoid R = 1.6667");
  const double bound = elliptic_lower_bound(osc.r, osc.R);
  EXPECT(std::abs(bound - 0.2228) <= 5e-5, "ellipsoid bound 0.2228");

  const ComplexVector q2 = ell.semiaxes()(0) * ell.basis().col(0);
  const auto w2 = witnesses(ell, q2, osc.r, osc.R, 10000, 11);
  const double threshold2 = lambda_threshold(osc.r);
  for (double div : {2.0, 4.0, 8.0}) {
    const auto rep = verify_cayley_inclusions(ell, w2, threshold2 / div, 10000, 11);
    EXPECT(rep.pass && rep.outer_violations == 0 && rep.inner_violations == 0,
           "ellipsoid inclusions pass");
  }

  const double sec = t.seconds();
  EXPECT(sec < 30.0, "runtime under 30 s");
  std::printf("[%s] criterion 6: elliptic pipeline (%.1f s)\n", ok ? "PASS" : "FAIL", sec);
  return ok;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 7. Plumbing: polar isometries, the transform round trips, CLI golden files.
bool criterion_plumbing(const std::string& cli) {
  Timer t;
  bool ok = true;

  std::mt19937_64 rng(700);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    ComplexMatrix m(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = Complex(g(rng), g(rng));
    const ComplexMatrix iso = polar_isometry(m);
    const double resid =
        (iso.adjoint() * iso - ComplexMatrix::Identity(5, 5)).cwiseAbs().maxCoeff();
    EXPECT(resid < 1e-10, "polar isometry residual");
  }

  EllipticityWitness w;
  w.q = ComplexVector::Zero(4);
  w.q_inner = ComplexVector::Zero(4);
  w.q_outer = ComplexVector::Zero(4);
  w.q_inner(0) = 0.5;
  w.q_outer(0) = 1.0;
  w.r = 0.5;
  w.R = 1.0;
  const auto frame = CayleyFrame::from_witness(w, 0.05);
  for (int trial = 0; trial < 200; ++trial) {
    ComplexVector v(4);
    for (int k = 0; k < 4; ++k) v(k) = Complex(g(rng), g(rng));
    EXPECT((frame.dilate(frame.dilate(v, true), false) - v).norm() <= 1e-12 * v.norm(),
           "dilation round trip");
    v(0) = Complex(0.2 + std::abs(v(0).real()), v(0).imag());
    EXPECT((frame.cayley(frame.cayley(v, true), false) - v).norm() <=
               1e-12 * (1.0 + v.norm()),
           "cayley round trip");
  }

  if (!cli.empty()) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cartan_squeeze_acceptance";
    fs::create_directories(dir);

    // element fixture for the spectral subcommand
    Hermitian3 h;
    h.diag = {Complex(3), Complex(2), Complex(1)};
    h.off[0][2] = 0.25;
    std::ofstream(dir / "element.json")
        << element_to_json(Element(FactorDescriptor::type_vi(), h)).dump(2);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"constants", " constants --all"},
        {"product", " constants --product 2,3"},
        {"certify", " certify --factor IV --dim 8 --samples 400 --seed 7 --grid 16"},
        {"elliptic", " elliptic --ball 2 --samples 600 --seed 11"},
        {"spectral", " spectral --file " + (dir / "element.json").string()},
        {"embed", " embed --factor VI --coords [0.3,0.7,0]"},
    };
    for (const auto& [name, args] : commands) {
      const fs::path out1 = dir / (name + ".1.txt");
      const fs::path out2 = dir / (name + ".2.txt");
      const std::string base = cli + args;
      const int rc1 = std::system((base + " > " + out1.string() + " 2>/dev/null").c_str());
      const int rc2 = std::system((base + " > " + out2.string() + " 2>/dev/null").c_str());
      EXPECT(rc1 == 0 && rc2 == 0, (name + ": exit code 0").c_str());
      const std::string a = slurp(out1);
      EXPECT(!a.empty() && a == slurp(out2), (name + ": byte-stable output").c_str());
    }

    // scriptable failure modes: unknown factor and a bad file are usage errors
    const int rc_bad = std::system((cli + " certify --factor Q > /dev/null 2>&1").c_str());
    EXPECT(WEXITSTATUS(rc_bad) == 2, "unknown factor exits 2");
    const int rc_file =
        std::system((cli + " elliptic --semiaxes 1,0 > /dev/null 2>&1").c_str());
    EXPECT(WEXITSTATUS(rc_file) == 2, "zero semiaxis exits 2");
  } else {
    std::printf("    note: --cli not given, golden checks skipped\n");
  }

  std::printf("[%s] criterion 7: plumbing and golden files (%.1f s)\n", ok ? "PASS" : "FAIL",
              t.seconds());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }

  int failures = 0;
  failures += !criterion_constants();
  failures += !criterion_certification();
  failures += !criterion_axioms();
  failures += !criterion_spectral();
  failures += !criterion_inner_product();
  failures += !criterion_elliptic();
  failures += !criterion_plumbing(cli);

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
