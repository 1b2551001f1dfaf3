#include <doctest.h>

#include <random>

#include "cartan/octonion.hpp"

using namespace cartan;

namespace {

Bioctonion random_bioct(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Bioctonion x;
  for (int i = 0; i < 8; ++i) x[i] = Complex(g(rng), g(rng));
  return x;
}

Octonion random_oct(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Octonion x;
  for (int i = 0; i < 8; ++i) x[i] = g(rng);
  return x;
}

}  // namespace

TEST_CASE("unit element and the fixed table") {
  const Octonion one = Octonion::unit(0);
  std::mt19937_64 rng(1);
  const Octonion x = random_oct(rng);
  CHECK(norm(one * x - x) == doctest::Approx(0.0));
  CHECK(norm(x * one - x) == doctest::Approx(0.0));

  // e_i e_{i+1} = e_{i+3} (indices mod 7), so e1 e2 = e4 and e5 e6 = e1.
  CHECK(norm(Octonion::unit(1) * Octonion::unit(2) - Octonion::unit(4)) == 0.0);
  CHECK(norm(Octonion::unit(2) * Octonion::unit(3) - Octonion::unit(5)) == 0.0);
  CHECK(norm(Octonion::unit(5) * Octonion::unit(6) - Octonion::unit(1)) == 0.0);
  CHECK(norm(Octonion::unit(7) * Octonion::unit(1) - Octonion::unit(3)) == 0.0);
  // anticommutation and squares
  CHECK(norm(Octonion::unit(2) * Octonion::unit(1) + Octonion::unit(4)) == 0.0);
  for (int i = 1; i < 8; ++i) {
    CHECK(norm(Octonion::unit(i) * Octonion::unit(i) + Octonion::unit(0)) == 0.0);
  }
}

TEST_CASE("norm is multiplicative on real octonions") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const Octonion x = random_oct(rng);
    const Octonion y = random_oct(rng);
    CHECK(std::abs(norm(x * y) - norm(x) * norm(y)) <= 1e-12 * norm(x) * norm(y));
  }
}

TEST_CASE("alternativity for bioctonions") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const Bioctonion x = random_bioct(rng);
    const Bioctonion y = random_bioct(rng);
    CHECK(norm((x * x) * y - x * (x * y)) <= 1e-12 * norm_sq(x) * norm(y));
    CHECK(norm((x * y) * y - x * (y * y)) <= 1e-12 * norm(x) * norm_sq(y));
  }
}

TEST_CASE("conjugations") {
  std::mt19937_64 rng(4);
  const Bioctonion x = random_bioct(rng);

  // octonion and complex conjugation commute
  CHECK(norm(star(conj_oct(x)) - conj_oct(star(x))) == 0.0);

  // x conj(x) = |x|^2 for real octonions
  const Octonion r = random_oct(rng);
  Octonion sq = r * conj_oct(r);
  CHECK(std::abs(sq[0] - norm_sq(r)) <= 1e-12 * norm_sq(r));
  for (int i = 1; i < 8; ++i) CHECK(std::abs(sq[i]) <= 1e-12 * norm_sq(r));

  // restriction of the bioctonion product to real coefficients is the
  // octonion product
  const Octonion a = random_oct(rng);
  const Octonion b = random_oct(rng);
  const Bioctonion prod = complexify(a) * complexify(b);
  CHECK(norm(real_part(prod) - a * b) <= 1e-13 * norm(a) * norm(b));
  for (int i = 0; i < 8; ++i) CHECK(prod[i].imag() == 0.0);
}
