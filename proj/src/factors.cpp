#include "cartan/factors.hpp"

#include <cmath>
#include <random>

#include "cartan/triple.hpp"

namespace cartan {

FactorDescriptor FactorDescriptor::type_i(int l, int n) {
  require(l >= 1 && n >= l, "type I requires 1 <= l <= n");
  return {FactorKind::I, l, n};
}
FactorDescriptor FactorDescriptor::type_ii(int l) {
  require(l >= 5, "type II requires l >= 5");
  return {FactorKind::II, l, 0};
}
FactorDescriptor FactorDescriptor::type_iii(int l) {
  require(l >= 2, "type III requires l >= 2");
  return {FactorKind::III, l, 0};
}
FactorDescriptor FactorDescriptor::type_iv(int n) {
  require(n >= 3, "type IV requires n >= 3");
  return {FactorKind::IV, 0, n};
}
FactorDescriptor FactorDescriptor::type_v() { return {FactorKind::V, 0, 0}; }
FactorDescriptor FactorDescriptor::type_vi() { return {FactorKind::VI, 0, 0}; }

int FactorDescriptor::rank() const {
  switch (kind) {
    case FactorKind::I: return l;
    case FactorKind::II: return l / 2;
    case FactorKind::III: return l;
    case FactorKind::IV: return 2;
    case FactorKind::V: return 2;
    case FactorKind::VI: return 3;
  }
  throw Error("bad factor kind");
}

int FactorDescriptor::dim() const {
  switch (kind) {
    case FactorKind::I: return l * n;
    case FactorKind::II: return l * (l - 1) / 2;
    case FactorKind::III: return l * (l + 1) / 2;
    case FactorKind::IV: return n;
    case FactorKind::V: return 16;
    case FactorKind::VI: return 27;
  }
  throw Error("bad factor kind");
}

std::string FactorDescriptor::name() const {
  switch (kind) {
    case FactorKind::I: return "I(" + std::to_string(l) + "," + std::to_string(n) + ")";
    case FactorKind::II: return "II(" + std::to_string(l) + ")";
    case FactorKind::III: return "III(" + std::to_string(l) + ")";
    case FactorKind::IV: return "IV(" + std::to_string(n) + ")";
    case FactorKind::V: return "V";
    case FactorKind::VI: return "VI";
  }
  return "?";
}

namespace {

bool is_matrix_kind(FactorKind k) {
  return k == FactorKind::I || k == FactorKind::II || k == FactorKind::III;
}

}  // namespace

Element::Element(FactorDescriptor factor, ComplexMatrix m) : factor_(factor), data_(std::move(m)) {
  require(is_matrix_kind(factor_.kind), "matrix payload needs a type I-III factor");
  const auto& mat = std::get<ComplexMatrix>(data_);
  const int rows = factor_.l;
  const int cols = factor_.kind == FactorKind::I ? factor_.n : factor_.l;
  require(mat.rows() == rows && mat.cols() == cols, "matrix shape does not match factor");
  if (factor_.kind != FactorKind::I) {
    const double scale = std::max(1.0, mat.cwiseAbs().maxCoeff());
    const ComplexMatrix defect =
        factor_.kind == FactorKind::II ? ComplexMatrix(mat.transpose() + mat)
                                       : ComplexMatrix(mat.transpose() - mat);
    require(defect.cwiseAbs().maxCoeff() <= 1e-12 * scale,
            "matrix violates the factor's symmetry class");
  }
}
Element::Element(FactorDescriptor factor, ComplexVector v) : factor_(factor), data_(std::move(v)) {
  require(factor_.kind == FactorKind::IV, "vector payload needs a type IV factor");
  require(std::get<ComplexVector>(data_).size() == factor_.n, "vector length does not match factor");
}
Element::Element(FactorDescriptor factor, BioctonionPair p) : factor_(factor), data_(std::move(p)) {
  require(factor_.kind == FactorKind::V, "bioctonion pair payload needs a type V factor");
}
Element::Element(FactorDescriptor factor, Hermitian3 h) : factor_(factor), data_(std::move(h)) {
  require(factor_.kind == FactorKind::VI, "hermitian payload needs a type VI factor");
}

Element Element::zero(const FactorDescriptor& factor) {
  switch (factor.kind) {
    case FactorKind::I:
      return Element(factor, ComplexMatrix(ComplexMatrix::Zero(factor.l, factor.n)));
    case FactorKind::II:
    case FactorKind::III:
      return Element(factor, ComplexMatrix(ComplexMatrix::Zero(factor.l, factor.l)));
    case FactorKind::IV:
      return Element(factor, ComplexVector(ComplexVector::Zero(factor.n)));
    case FactorKind::V:
      return Element(factor, BioctonionPair{});
    case FactorKind::VI:
      return Element(factor, Hermitian3{});
  }
  throw Error("bad factor kind");
}

const ComplexMatrix& Element::matrix() const {
  require(is_matrix_kind(factor_.kind), "element is not matrix-valued");
  return std::get<ComplexMatrix>(data_);
}
const ComplexVector& Element::vector() const {
  require(factor_.kind == FactorKind::IV, "element is not vector-valued");
  return std::get<ComplexVector>(data_);
}
const BioctonionPair& Element::pair() const {
  require(factor_.kind == FactorKind::V, "element is not a bioctonion pair");
  return std::get<BioctonionPair>(data_);
}
const Hermitian3& Element::herm() const {
  require(factor_.kind == FactorKind::VI, "element is not a hermitian 3x3 matrix");
  return std::get<Hermitian3>(data_);
}

Element& Element::operator+=(const Element& r) {
  require(factor_ == r.factor_, "factor mismatch");
  switch (factor_.kind) {
    case FactorKind::I:
    case FactorKind::II:
    case FactorKind::III:
      std::get<ComplexMatrix>(data_) += std::get<ComplexMatrix>(r.data_);
      break;
    case FactorKind::IV:
      std::get<ComplexVector>(data_) += std::get<ComplexVector>(r.data_);
      break;
    case FactorKind::V: {
      auto& p = std::get<BioctonionPair>(data_);
      const auto& q = std::get<BioctonionPair>(r.data_);
      p[0] += q[0];
      p[1] += q[1];
      break;
    }
    case FactorKind::VI: {
      auto& h = std::get<Hermitian3>(data_);
      const auto& g = std::get<Hermitian3>(r.data_);
      for (int i = 0; i < 3; ++i) {
        h.diag[i] += g.diag[i];
        h.off[i] += g.off[i];
      }
      break;
    }
  }
  return *this;
}

Element& Element::operator-=(const Element& r) {
  Element neg = r;
  neg *= Complex(-1, 0);
  return *this += neg;
}

Element& Element::operator*=(Complex s) {
  switch (factor_.kind) {
    case FactorKind::I:
    case FactorKind::II:
    case FactorKind::III:
      std::get<ComplexMatrix>(data_) *= s;
      break;
    case FactorKind::IV:
      std::get<ComplexVector>(data_) *= s;
      break;
    case FactorKind::V:
      for (auto& b : std::get<BioctonionPair>(data_)) b *= s;
      break;
    case FactorKind::VI: {
      auto& h = std::get<Hermitian3>(data_);
      for (int i = 0; i < 3; ++i) {
        h.diag[i] *= s;
        h.off[i] *= s;
      }
      break;
    }
  }
  return *this;
}

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Index maps for the packed upper-triangle orderings.
int pair_count(int l) { return l * (l - 1) / 2; }

void pair_from_index(int l, int k, int& i, int& j) {
  for (i = 0; i < l; ++i) {
    const int row = l - 1 - i;
    if (k < row) {
      j = i + 1 + k;
      return;
    }
    k -= row;
  }
  throw Error("pair index out of range");
}

}  // namespace

ComplexVector coordinates(const Element& z) {
  const FactorDescriptor& f = z.factor();
  ComplexVector c(f.dim());
  switch (f.kind) {
    case FactorKind::I: {
      const auto& m = z.matrix();
      for (int i = 0; i < f.l; ++i)
        for (int j = 0; j < f.n; ++j) c(i * f.n + j) = m(i, j);
      break;
    }
    case FactorKind::II: {
      const auto& m = z.matrix();
      for (int k = 0; k < pair_count(f.l); ++k) {
        int i, j;
        pair_from_index(f.l, k, i, j);
        c(k) = m(i, j);
      }
      break;
    }
    case FactorKind::III: {
      const auto& m = z.matrix();
      for (int i = 0; i < f.l; ++i) c(i) = m(i, i);
      for (int k = 0; k < pair_count(f.l); ++k) {
        int i, j;
        pair_from_index(f.l, k, i, j);
        c(f.l + k) = kSqrt2 * m(i, j);
      }
      break;
    }
    case FactorKind::IV:
      c = z.vector();
      break;
    case FactorKind::V: {
      const auto& p = z.pair();
      for (int s = 0; s < 2; ++s)
        for (int m = 0; m < 8; ++m) c(s * 8 + m) = kSqrt2 * p[s][m];
      break;
    }
    case FactorKind::VI: {
      const auto& h = z.herm();
      for (int i = 0; i < 3; ++i) c(i) = h.diag[i];
      for (int s = 0; s < 3; ++s)
        for (int m = 0; m < 8; ++m) c(3 + s * 8 + m) = kSqrt2 * h.off[s][m];
      break;
    }
  }
  return c;
}

Element from_coordinates(const FactorDescriptor& f, const ComplexVector& c) {
  require(c.size() == f.dim(), "coordinate vector length does not match factor dimension");
  switch (f.kind) {
    case FactorKind::I: {
      ComplexMatrix m(f.l, f.n);
      for (int i = 0; i < f.l; ++i)
        for (int j = 0; j < f.n; ++j) m(i, j) = c(i * f.n + j);
      return Element(f, std::move(m));
    }
    case FactorKind::II: {
      ComplexMatrix m = ComplexMatrix::Zero(f.l, f.l);
      for (int k = 0; k < pair_count(f.l); ++k) {
        int i, j;
        pair_from_index(f.l, k, i, j);
        m(i, j) = c(k);
        m(j, i) = -c(k);
      }
      return Element(f, std::move(m));
    }
    case FactorKind::III: {
      ComplexMatrix m = ComplexMatrix::Zero(f.l, f.l);
      for (int i = 0; i < f.l; ++i) m(i, i) = c(i);
      for (int k = 0; k < pair_count(f.l); ++k) {
        int i, j;
        pair_from_index(f.l, k, i, j);
        m(i, j) = m(j, i) = c(f.l + k) / kSqrt2;
      }
      return Element(f, std::move(m));
    }
    case FactorKind::IV:
      return Element(f, ComplexVector(c));
    case FactorKind::V: {
      BioctonionPair p{};
      for (int s = 0; s < 2; ++s)
        for (int m = 0; m < 8; ++m) p[s][m] = c(s * 8 + m) / kSqrt2;
      return Element(f, p);
    }
    case FactorKind::VI: {
      Hermitian3 h;
      for (int i = 0; i < 3; ++i) h.diag[i] = c(i);
      for (int s = 0; s < 3; ++s)
        for (int m = 0; m < 8; ++m) h.off[s][m] = c(3 + s * 8 + m) / kSqrt2;
      return Element(f, h);
    }
  }
  throw Error("bad factor kind");
}

Element basis_element(const FactorDescriptor& f, int index) {
  require(index >= 0 && index < f.dim(), "basis index out of range");
  ComplexVector c = ComplexVector::Zero(f.dim());
  c(index) = 1.0;
  return from_coordinates(f, c);
}

double symmetry_residual(const Element& z) {
  const FactorDescriptor& f = z.factor();
  switch (f.kind) {
    case FactorKind::II:
      return (z.matrix().transpose() + z.matrix()).cwiseAbs().maxCoeff();
    case FactorKind::III:
      return (z.matrix().transpose() - z.matrix()).cwiseAbs().maxCoeff();
    default:
      return 0.0;  // shape already enforced by construction
  }
}

std::vector<Element> canonical_axis_tripotents(const FactorDescriptor& f) {
  std::vector<Element> axes;
  switch (f.kind) {
    case FactorKind::I: {
      for (int k = 0; k < f.l; ++k) {
        ComplexMatrix m = ComplexMatrix::Zero(f.l, f.n);
        m(k, k) = 1.0;
        axes.emplace_back(f, std::move(m));
      }
      break;
    }
    case FactorKind::II: {
      for (int k = 0; k < f.l / 2; ++k) {
        ComplexMatrix m = ComplexMatrix::Zero(f.l, f.l);
        m(2 * k, 2 * k + 1) = 1.0;
        m(2 * k + 1, 2 * k) = -1.0;
        axes.emplace_back(f, std::move(m));
      }
      break;
    }
    case FactorKind::III: {
      for (int k = 0; k < f.l; ++k) {
        ComplexMatrix m = ComplexMatrix::Zero(f.l, f.l);
        m(k, k) = 1.0;
        axes.emplace_back(f, std::move(m));
      }
      break;
    }
    case FactorKind::IV: {
      const double r = 1.0 / std::sqrt(2.0);
      for (double sign : {1.0, -1.0}) {
        ComplexVector v = ComplexVector::Zero(f.n);
        v(0) = r;
        v(1) = Complex(0, sign * r);
        axes.emplace_back(f, std::move(v));
      }
      break;
    }
    case FactorKind::V: {
      // Isotropic slot tripotents m = (1 + i e1)/2 and its octonion
      // conjugate; coordinate units of the slots are not triple-orthogonal.
      Bioctonion m;
      m[0] = Complex(0.5, 0);
      m[1] = Complex(0, 0.5);
      BioctonionPair p1{};
      p1[0] = m;
      BioctonionPair p2{};
      p2[1] = conj_oct(m);
      axes.emplace_back(f, p1);
      axes.emplace_back(f, p2);
      break;
    }
    case FactorKind::VI: {
      for (int k = 0; k < 3; ++k) {
        Hermitian3 h;
        h.diag[static_cast<size_t>(k)] = 1.0;
        axes.emplace_back(f, h);
      }
      break;
    }
  }
  return axes;
}

Element random_element(const FactorDescriptor& f, uint64_t seed, double spectral_norm_cap) {
  require(spectral_norm_cap > 0, "spectral_norm_cap must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector c(f.dim());
  for (int i = 0; i < f.dim(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    c(i) = Complex(re, im);
  }
  Element z = from_coordinates(f, c);
  const double nrm = spectral_norm(z);
  if (nrm > spectral_norm_cap) z *= Complex(spectral_norm_cap / nrm, 0);
  return z;
}

}  // namespace cartan
