#pragma once

#include "cartan/factors.hpp"

namespace cartan {

/// Jordan triple product of the factor; linear in x and z, conjugate-linear
/// in y.  Throws on descriptor mismatch.
Element triple_product(const Element& x, const Element& y, const Element& z);

/// Matrix of the complex-linear map x -> {a, b, x} in the factor's standard
/// coordinate basis.  Hermitian for b = a.
ComplexMatrix box_operator_matrix(const Element& a, const Element& b);

/// Spectral norm: sqrt of the spectral radius of z box z.
double spectral_norm(const Element& z);

/// Norm of the factor's Hilbert-space structure, normalized so minimal
/// tripotents have norm 1: Hilbert-Schmidt for I and III, HS/sqrt(2) for II,
/// the spin inner product for IV, the trace form for V and VI.
double hilbert_norm(const Element& z);

/// (1/18) Trace D(x,y) with D(x,y) = 2 x box y; factors V (through its
/// embedding into VI) and VI only.
Complex trace_inner_product(const Element& x, const Element& y);

enum class TripotentClass { not_tripotent, tripotent, minimal_tripotent };

/// Tripotent iff |{e,e,e} - e| <= tol; minimal iff the span of {e, b, e}
/// over the basis has numerical rank 1.
TripotentClass classify_tripotent(const Element& e, double tol = 1e-9);

/// True iff a box b and b box a both vanish within tol.
bool are_orthogonal(const Element& a, const Element& b, double tol = 1e-9);

}  // namespace cartan
