#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "cartan/common.hpp"

namespace cartan {

// Multiplication table for the basis {1, e1, ..., e7}, generated from the
// oriented Fano lines e_i * e_{i+1} = e_{i+3} (indices mod 7).  This is the
// single place the table is fixed; everything octonionic derives from it.
struct FanoTable {
  std::array<std::array<int8_t, 8>, 8> sign{};
  std::array<std::array<uint8_t, 8>, 8> index{};

  constexpr FanoTable() {
    for (int i = 0; i < 8; ++i) {
      sign[0][i] = sign[i][0] = 1;
      index[0][i] = index[i][0] = static_cast<uint8_t>(i);
    }
    for (int i = 1; i < 8; ++i) {
      sign[i][i] = -1;
      index[i][i] = 0;
    }
    // Oriented lines (a, b, c): e_a e_b = e_c cyclically, minus when reversed.
    for (int i = 1; i <= 7; ++i) {
      const int a = i;
      const int b = i % 7 + 1;
      const int c = (i + 2) % 7 + 1;
      const int line[3] = {a, b, c};
      for (int k = 0; k < 3; ++k) {
        const int u = line[k], v = line[(k + 1) % 3], w = line[(k + 2) % 3];
        sign[u][v] = 1;
        index[u][v] = static_cast<uint8_t>(w);
        sign[v][u] = -1;
        index[v][u] = static_cast<uint8_t>(w);
      }
    }
  }
};

inline constexpr FanoTable kFano{};

/// Octonion over a real or complex scalar field.  With Scalar = Complex this
/// is a bioctonion: octonion conjugation (conj) negates the e1..e7
/// coefficients, complex conjugation (star) conjugates each coefficient, and
/// the two involutions commute.
template <typename Scalar>
struct BasicOctonion {
  std::array<Scalar, 8> c{};

  BasicOctonion() = default;
  explicit BasicOctonion(Scalar real) { c[0] = real; }

  static BasicOctonion unit(int i) {
    BasicOctonion o;
    o.c[static_cast<size_t>(i)] = Scalar(1);
    return o;
  }

  Scalar& operator[](int i) { return c[static_cast<size_t>(i)]; }
  const Scalar& operator[](int i) const { return c[static_cast<size_t>(i)]; }

  BasicOctonion& operator+=(const BasicOctonion& r) {
    for (int i = 0; i < 8; ++i) c[i] += r.c[i];
    return *this;
  }
  BasicOctonion& operator-=(const BasicOctonion& r) {
    for (int i = 0; i < 8; ++i) c[i] -= r.c[i];
    return *this;
  }
  BasicOctonion& operator*=(Scalar s) {
    for (auto& x : c) x *= s;
    return *this;
  }

  friend BasicOctonion operator+(BasicOctonion a, const BasicOctonion& b) { return a += b; }
  friend BasicOctonion operator-(BasicOctonion a, const BasicOctonion& b) { return a -= b; }
  friend BasicOctonion operator*(BasicOctonion a, Scalar s) { return a *= s; }
  friend BasicOctonion operator*(Scalar s, BasicOctonion a) { return a *= s; }
  friend BasicOctonion operator-(BasicOctonion a) {
    for (auto& x : a.c) x = -x;
    return a;
  }

  friend BasicOctonion operator*(const BasicOctonion& a, const BasicOctonion& b) {
    BasicOctonion r;
    for (int i = 0; i < 8; ++i) {
      if (a.c[i] == Scalar(0)) continue;
      for (int j = 0; j < 8; ++j) {
        r.c[kFano.index[i][j]] += double(kFano.sign[i][j]) * a.c[i] * b.c[j];
      }
    }
    return r;
  }
};

using Octonion = BasicOctonion<double>;
using Bioctonion = BasicOctonion<Complex>;

/// Octonion conjugation x -> x̄ (negates the imaginary basis coefficients).
template <typename S>
BasicOctonion<S> conj_oct(BasicOctonion<S> x) {
  for (int i = 1; i < 8; ++i) x.c[i] = -x.c[i];
  return x;
}

/// Complex conjugation x -> x* (conjugates each coefficient); identity on
/// real octonions.
inline Octonion star(const Octonion& x) { return x; }
inline Bioctonion star(Bioctonion x) {
  for (auto& v : x.c) v = std::conj(v);
  return x;
}

inline double norm_sq(const Octonion& x) {
  double s = 0;
  for (double v : x.c) s += v * v;
  return s;
}
inline double norm_sq(const Bioctonion& x) {
  double s = 0;
  for (const Complex& v : x.c) s += std::norm(v);
  return s;
}
template <typename S>
double norm(const BasicOctonion<S>& x) {
  return std::sqrt(norm_sq(x));
}

inline Octonion real_part(const Bioctonion& x) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = x.c[i].real();
  return r;
}
inline Bioctonion complexify(const Octonion& x) {
  Bioctonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = Complex(x.c[i], 0.0);
  return r;
}

}  // namespace cartan
