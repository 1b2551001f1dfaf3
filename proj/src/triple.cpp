#include "cartan/triple.hpp"

#include "cartan/albert.hpp"

namespace cartan {

namespace {

Element triple_matrix(const Element& x, const Element& y, const Element& z) {
  const ComplexMatrix& a = x.matrix();
  const ComplexMatrix& b = y.matrix();
  const ComplexMatrix& c = z.matrix();
  ComplexMatrix r = 0.5 * (a * b.adjoint() * c + c * b.adjoint() * a);
  return Element(x.factor(), std::move(r));
}

Element triple_spin(const Element& x, const Element& y, const Element& z) {
  const ComplexVector& a = x.vector();
  const ComplexVector& b = y.vector();
  const ComplexVector& c = z.vector();
  // <u,v> = sum u_i conj(v_i); conjugation is componentwise.
  const Complex ab = b.dot(a);
  const Complex cb = b.dot(c);
  const Complex a_cstar = (a.array() * c.array()).sum();
  ComplexVector r = 0.5 * (ab * c + cb * a - a_cstar * b.conjugate());
  return Element(x.factor(), std::move(r));
}

Element triple_v(const Element& x, const Element& y, const Element& z) {
  const Hermitian3 r =
      albert_triple(embed_pair(x.pair()), embed_pair(y.pair()), embed_pair(z.pair()));
  return Element(x.factor(), project_pair(r, 1e-9));
}

Element triple_vi(const Element& x, const Element& y, const Element& z) {
  return Element(x.factor(), albert_triple(x.herm(), y.herm(), z.herm()));
}

}  // namespace

Element triple_product(const Element& x, const Element& y, const Element& z) {
  require(x.factor() == y.factor() && y.factor() == z.factor(),
          "triple_product: factor mismatch");
  switch (x.factor().kind) {
    case FactorKind::I:
    case FactorKind::II:
    case FactorKind::III:
      return triple_matrix(x, y, z);
    case FactorKind::IV:
      return triple_spin(x, y, z);
    case FactorKind::V:
      return triple_v(x, y, z);
    case FactorKind::VI:
      return triple_vi(x, y, z);
  }
  throw Error("bad factor kind");
}

ComplexMatrix box_operator_matrix(const Element& a, const Element& b) {
  require(a.factor() == b.factor(), "box_operator_matrix: factor mismatch");
  const FactorDescriptor& f = a.factor();
  const int d = f.dim();

  if (f.kind == FactorKind::VI) {
    const Matrix27 m = albert_box_matrix(a.herm(), b.herm());
    return ComplexMatrix(m);
  }
  if (f.kind == FactorKind::V) {
    // The slot subtriple occupies coordinates 3..18 of the VI basis.
    const Matrix27 m = albert_box_matrix(embed_pair(a.pair()), embed_pair(b.pair()));
    return ComplexMatrix(m.block(3, 3, 16, 16));
  }

  ComplexMatrix m(d, d);
  for (int k = 0; k < d; ++k) {
    m.col(k) = coordinates(triple_product(a, b, basis_element(f, k)));
  }
  return m;
}

double spectral_norm(const Element& z) {
  const ComplexMatrix m = box_operator_matrix(z, z);
  return std::sqrt(spectral_radius(m));
}

double hilbert_norm(const Element& z) { return coordinates(z).norm(); }

Complex trace_inner_product(const Element& x, const Element& y) {
  require(x.factor() == y.factor(), "trace_inner_product: factor mismatch");
  const FactorKind k = x.factor().kind;
  require(k == FactorKind::V || k == FactorKind::VI,
          "trace_inner_product is defined for factors V and VI");
  Matrix27 box;
  if (k == FactorKind::VI) {
    box = albert_box_matrix(x.herm(), y.herm());
  } else {
    box = albert_box_matrix(embed_pair(x.pair()), embed_pair(y.pair()));
  }
  // (1/18) Trace D(x,y), D = 2 x box y, traced over the 27-dimensional carrier.
  return box.trace() / 9.0;
}

TripotentClass classify_tripotent(const Element& e, double tol) {
  const Element cube = triple_product(e, e, e);
  const double residual = (coordinates(cube) - coordinates(e)).norm();
  if (residual > tol) return TripotentClass::not_tripotent;

  const FactorDescriptor& f = e.factor();
  const int d = f.dim();
  ComplexMatrix span(d, d);
  for (int k = 0; k < d; ++k) {
    span.col(k) = coordinates(triple_product(e, basis_element(f, k), e));
  }
  const Eigen::VectorXd sv = svd(span).singular_values;
  if (sv(0) <= tol) return TripotentClass::tripotent;  // zero element
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++rank;
  return rank == 1 ? TripotentClass::minimal_tripotent : TripotentClass::tripotent;
}

bool are_orthogonal(const Element& a, const Element& b, double tol) {
  require(a.factor() == b.factor(), "are_orthogonal: factor mismatch");
  const double ab = box_operator_matrix(a, b).cwiseAbs().maxCoeff();
  const double ba = box_operator_matrix(b, a).cwiseAbs().maxCoeff();
  return ab <= tol && ba <= tol;
}

}  // namespace cartan
