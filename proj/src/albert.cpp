#include "cartan/albert.hpp"

#include <array>

namespace cartan {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

using Bioct3x3 = std::array<Bioctonion, 9>;

Bioct3x3 to_full(const Hermitian3& h) {
  Bioct3x3 m{};
  m[0] = Bioctonion(h.diag[0]);
  m[4] = Bioctonion(h.diag[1]);
  m[8] = Bioctonion(h.diag[2]);
  m[1] = h.off[0];
  m[3] = conj_oct(h.off[0]);
  m[2] = h.off[1];
  m[6] = conj_oct(h.off[1]);
  m[5] = h.off[2];
  m[7] = conj_oct(h.off[2]);
  return m;
}

// The symmetrized product of hermitian matrices is hermitian with scalar
// diagonal, so reading the upper entries and the diagonal real-octonion part
// is exact up to roundoff.
Hermitian3 from_full_hermitian(const Bioct3x3& m) {
  Hermitian3 h;
  h.diag[0] = m[0][0];
  h.diag[1] = m[4][0];
  h.diag[2] = m[8][0];
  h.off[0] = m[1];
  h.off[1] = m[2];
  h.off[2] = m[5];
  return h;
}

Bioct3x3 mat_mult(const Bioct3x3& a, const Bioct3x3& b) {
  Bioct3x3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Bioctonion s;
      for (int k = 0; k < 3; ++k) s += a[i * 3 + k] * b[k * 3 + j];
      c[i * 3 + j] = s;
    }
  return c;
}

// Structure constants of the Jordan product in coordinates, built once.
struct JordanTensor {
  // table[i][27*j + k] = coefficient of basis_k in basis_i o basis_j
  std::array<Vector27, 27 * 27> prod;

  JordanTensor() {
    std::array<Hermitian3, 27> basis;
    for (int i = 0; i < 27; ++i) {
      Vector27 c = Vector27::Zero();
      c(i) = 1.0;
      basis[i] = herm_from_coordinates(c);
    }
    for (int i = 0; i < 27; ++i)
      for (int j = i; j < 27; ++j) {
        Vector27 c = herm_coordinates(jordan_mult(basis[i], basis[j]));
        prod[i * 27 + j] = c;
        prod[j * 27 + i] = c;
      }
  }
};

const JordanTensor& jordan_tensor() {
  static const JordanTensor t;
  return t;
}

Vector27 jordan_mult_coords(const Vector27& a, const Vector27& b) {
  const JordanTensor& t = jordan_tensor();
  Vector27 out = Vector27::Zero();
  for (int i = 0; i < 27; ++i) {
    if (a(i) == Complex(0)) continue;
    for (int j = 0; j < 27; ++j) {
      const Complex w = a(i) * b(j);
      if (w == Complex(0)) continue;
      out += w * t.prod[i * 27 + j];
    }
  }
  return out;
}

}  // namespace

Hermitian3 herm_identity() {
  Hermitian3 h;
  h.diag = {Complex(1), Complex(1), Complex(1)};
  return h;
}

Hermitian3 herm_add(const Hermitian3& a, const Hermitian3& b) {
  Hermitian3 h;
  for (int i = 0; i < 3; ++i) {
    h.diag[i] = a.diag[i] + b.diag[i];
    h.off[i] = a.off[i] + b.off[i];
  }
  return h;
}

Hermitian3 herm_scale(const Hermitian3& a, Complex s) {
  Hermitian3 h;
  for (int i = 0; i < 3; ++i) {
    h.diag[i] = a.diag[i] * s;
    h.off[i] = a.off[i] * s;
  }
  return h;
}

Hermitian3 herm_star(const Hermitian3& a) {
  Hermitian3 h;
  for (int i = 0; i < 3; ++i) {
    h.diag[i] = std::conj(a.diag[i]);
    h.off[i] = star(a.off[i]);
  }
  return h;
}

Complex herm_trace(const Hermitian3& a) { return a.diag[0] + a.diag[1] + a.diag[2]; }

Hermitian3 jordan_mult(const Hermitian3& a, const Hermitian3& b) {
  const Bioct3x3 fa = to_full(a);
  const Bioct3x3 fb = to_full(b);
  const Bioct3x3 ab = mat_mult(fa, fb);
  const Bioct3x3 ba = mat_mult(fb, fa);
  Bioct3x3 sym{};
  for (int i = 0; i < 9; ++i) sym[i] = (ab[i] + ba[i]) * Complex(0.5);
  return from_full_hermitian(sym);
}

Hermitian3 albert_triple(const Hermitian3& x, const Hermitian3& y, const Hermitian3& z) {
  const Hermitian3 ys = herm_star(y);
  const Hermitian3 a = jordan_mult(jordan_mult(x, ys), z);
  const Hermitian3 b = jordan_mult(x, jordan_mult(ys, z));
  const Hermitian3 c = jordan_mult(ys, jordan_mult(x, z));
  return herm_add(herm_add(a, b), herm_scale(c, Complex(-1)));
}

Vector27 herm_coordinates(const Hermitian3& a) {
  Vector27 c;
  for (int i = 0; i < 3; ++i) c(i) = a.diag[i];
  for (int s = 0; s < 3; ++s)
    for (int m = 0; m < 8; ++m) c(3 + s * 8 + m) = kSqrt2 * a.off[s][m];
  return c;
}

Hermitian3 herm_from_coordinates(const Vector27& c) {
  Hermitian3 h;
  for (int i = 0; i < 3; ++i) h.diag[i] = c(i);
  for (int s = 0; s < 3; ++s)
    for (int m = 0; m < 8; ++m) h.off[s][m] = c(3 + s * 8 + m) / kSqrt2;
  return h;
}

Matrix27 jordan_left_matrix(const Hermitian3& w) {
  const Vector27 cw = herm_coordinates(w);
  const JordanTensor& t = jordan_tensor();
  Matrix27 m = Matrix27::Zero();
  for (int i = 0; i < 27; ++i) {
    if (cw(i) == Complex(0)) continue;
    for (int j = 0; j < 27; ++j) m.col(j) += cw(i) * t.prod[i * 27 + j];
  }
  return m;
}

Matrix27 albert_box_matrix(const Hermitian3& a, const Hermitian3& b) {
  const Hermitian3 bs = herm_star(b);
  const Vector27 ca = herm_coordinates(a);
  const Vector27 cbs = herm_coordinates(bs);
  const Hermitian3 ab = herm_from_coordinates(jordan_mult_coords(ca, cbs));
  const Matrix27 la = jordan_left_matrix(a);
  const Matrix27 lbs = jordan_left_matrix(bs);
  return jordan_left_matrix(ab) + la * lbs - lbs * la;
}

Hermitian3 embed_pair(const BioctonionPair& p) {
  Hermitian3 h;
  h.off[0] = p[0];
  h.off[1] = p[1];
  return h;
}

BioctonionPair project_pair(const Hermitian3& h, double tol) {
  double leak = 0;
  for (int i = 0; i < 3; ++i) leak += std::norm(h.diag[i]);
  leak += norm_sq(h.off[2]);
  if (leak > tol * tol) {
    throw NumericalError("type V triple left the (1,2)/(1,3) slot subtriple");
  }
  return BioctonionPair{h.off[0], h.off[1]};
}

}  // namespace cartan
