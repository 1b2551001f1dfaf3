// Times the OpenMP sweeps against the serial reference path and checks that
// both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cartan/elliptic.hpp"
#include "cartan/squeezing.hpp"

using namespace cartan;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-28s serial %9.1f ms   openmp %9.1f ms   speedup %5.2fx   identical %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms, identical ? "yes" : "NO");
}

}  // namespace

int main() {
  if (const char* env = std::getenv("CARTAN_SQUEEZE_THREADS")) {
#ifdef _OPENMP
    if (std::atoi(env) > 0) omp_set_num_threads(std::atoi(env));
#endif
  }
#ifdef _OPENMP
  std::printf("openmp max threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp\n");
#endif

  SweepPolicy serial{64, false};
  SweepPolicy parallel{64, true};

  // warm the jordan structure tensor so the first timed run is not charged
  sandwich_verify(FactorDescriptor::type_vi(), 8, 1, 1e-8, serial);

  {
    const auto f = FactorDescriptor::type_vi();
    SandwichCertificate a, b;
    const double ts = time_ms([&] { a = sandwich_verify(f, 2000, 7, 1e-8, serial); });
    const double tp = time_ms([&] { b = sandwich_verify(f, 2000, 7, 1e-8, parallel); });
    report("sandwich VI (2000)", ts, tp,
           a.max_lower_violation == b.max_lower_violation &&
               a.max_upper_violation == b.max_upper_violation);
  }
  {
    const auto f = FactorDescriptor::type_vi();
    const EmbeddingEvaluator g = canonical_scaled_inclusion(f);
    AxisEnergyReport a, b;
    const double ts =
        time_ms([&] { a = rho_upper_certificate(g, 3, 64, 1.0 - 1e-6, 2024, 100000, serial); });
    const double tp =
        time_ms([&] { b = rho_upper_certificate(g, 3, 64, 1.0 - 1e-6, 2024, 100000, parallel); });
    report("rho quadrature VI (64^3)", ts, tp,
           a.total_energy == b.total_energy && a.rho_upper == b.rho_upper);
  }
  {
    const Ellipsoid ball(ComplexVector::Zero(4), Eigen::VectorXd::Constant(4, 1.0));
    const auto rr = ball_witness_radii(1.0);
    const ComplexVector q = ball.basis().col(0);
    const EllipticityWitness w = witnesses(ball, q, rr.r, rr.R, 512, 11);
    const double lambda = lambda_threshold(rr.r) / 2.0;
    CayleyReport a, b;
    const double ts =
        time_ms([&] { a = verify_cayley_inclusions(ball, w, lambda, 20000, 11, serial); });
    const double tp =
        time_ms([&] { b = verify_cayley_inclusions(ball, w, lambda, 20000, 11, parallel); });
    report("cayley ball (20000)", ts, tp,
           a.outer_worst_margin == b.outer_worst_margin &&
               a.inner_worst_margin == b.inner_worst_margin);
  }
  return 0;
}
