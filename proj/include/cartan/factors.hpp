#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "cartan/linalg.hpp"
#include "cartan/octonion.hpp"

namespace cartan {

enum class FactorKind { I, II, III, IV, V, VI };

/// Which Cartan factor an element lives in.  Owns the rank and dimension
/// formulas.  I(l,n): l x n complex matrices, l <= n.  II(l): antisymmetric
/// l x l, l >= 5.  III(l): symmetric l x l, l >= 2.  IV(n): spin factor on
/// C^n, n >= 3.  V: M_{1,2}(O), dim 16.  VI: H_3(O), dim 27.
struct FactorDescriptor {
  FactorKind kind;
  int l = 0;  // types I, II, III
  int n = 0;  // type I columns, type IV dimension

  static FactorDescriptor type_i(int l, int n);
  static FactorDescriptor type_ii(int l);
  static FactorDescriptor type_iii(int l);
  static FactorDescriptor type_iv(int n);
  static FactorDescriptor type_v();
  static FactorDescriptor type_vi();

  int rank() const;
  int dim() const;  // complex dimension
  std::string name() const;

  friend bool operator==(const FactorDescriptor& a, const FactorDescriptor& b) {
    return a.kind == b.kind && a.l == b.l && a.n == b.n;
  }
  friend bool operator!=(const FactorDescriptor& a, const FactorDescriptor& b) {
    return !(a == b);
  }
};

/// Hermitian 3x3 bioctonion matrix: 3 complex diagonal scalars plus the
/// (1,2), (1,3), (2,3) entries; the mirrored entries are the octonion
/// conjugates.
struct Hermitian3 {
  std::array<Complex, 3> diag{};
  std::array<Bioctonion, 3> off{};  // off[0]=(1,2), off[1]=(1,3), off[2]=(2,3)
};

using BioctonionPair = std::array<Bioctonion, 2>;

/// A point of a Cartan factor.  The payload matches the factor kind:
/// ComplexMatrix for I-III, ComplexVector for IV, a pair of bioctonions for
/// V, a Hermitian3 for VI.
class Element {
 public:
  Element(FactorDescriptor factor, ComplexMatrix m);
  Element(FactorDescriptor factor, ComplexVector v);
  Element(FactorDescriptor factor, BioctonionPair p);
  Element(FactorDescriptor factor, Hermitian3 h);

  static Element zero(const FactorDescriptor& factor);

  const FactorDescriptor& factor() const { return factor_; }
  const ComplexMatrix& matrix() const;
  const ComplexVector& vector() const;
  const BioctonionPair& pair() const;
  const Hermitian3& herm() const;

  Element& operator+=(const Element& r);
  Element& operator-=(const Element& r);
  Element& operator*=(Complex s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, Complex s) { return a *= s; }
  friend Element operator*(Complex s, Element a) { return a *= s; }
  friend Element operator*(Element a, double s) { return a *= Complex(s, 0); }
  friend Element operator*(double s, Element a) { return a *= Complex(s, 0); }

 private:
  FactorDescriptor factor_;
  std::variant<ComplexMatrix, ComplexVector, BioctonionPair, Hermitian3> data_;
};

/// Coordinates in the factor's standard basis.  The basis is orthonormal for
/// the factor's Hilbert inner product, so hilbert_norm(z) = coordinates(z).norm():
///   I      matrix units E_ij (row-major)
///   II     E_ij - E_ji, i < j (lexicographic)
///   III    E_ii, then (E_ij + E_ji)/sqrt(2), i < j
///   IV     standard units of C^n
///   V      octonion units per slot, scaled by 1/sqrt(2)
///   VI     diagonal units, then (1,2),(1,3),(2,3) octonion units / sqrt(2)
ComplexVector coordinates(const Element& z);
Element from_coordinates(const FactorDescriptor& factor, const ComplexVector& coords);
Element basis_element(const FactorDescriptor& factor, int index);

/// Checks the payload against the factor's symmetry class (antisymmetric for
/// II, symmetric for III, shape for I/IV); returns the max residual.
double symmetry_residual(const Element& z);

/// Deterministic pseudo-random element respecting the factor's symmetry
/// class, rescaled so spectral_norm <= cap.
Element random_element(const FactorDescriptor& factor, uint64_t seed, double spectral_norm_cap);

/// The factor's canonical maximal family of mutually orthogonal minimal
/// tripotents (rank-many): matrix units E_kk for I and III, the antisymmetric
/// pair blocks for II, (1, +-i)/sqrt(2) for IV, the isotropic slot pair for V,
/// the diagonal units for VI.
std::vector<Element> canonical_axis_tripotents(const FactorDescriptor& factor);

}  // namespace cartan
