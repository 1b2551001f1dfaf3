#pragma once

#include "cartan/factors.hpp"

namespace cartan {

// Kernel for the 27-dimensional Jordan algebra of hermitian 3x3 bioctonion
// matrices and its 16-dimensional subtriple of (1,2)/(1,3) slot pairs.

using Vector27 = Eigen::Matrix<Complex, 27, 1>;
using Matrix27 = Eigen::Matrix<Complex, 27, 27>;

Hermitian3 herm_identity();
Hermitian3 herm_add(const Hermitian3& a, const Hermitian3& b);
Hermitian3 herm_scale(const Hermitian3& a, Complex s);
Hermitian3 herm_star(const Hermitian3& a);  // complex-conjugate coefficients
Complex herm_trace(const Hermitian3& a);

/// Jordan product (ab + ba)/2, computed through the full 3x3 bioctonion
/// matrix product.
Hermitian3 jordan_mult(const Hermitian3& a, const Hermitian3& b);

/// Triple product {x,y,z} = (x o y*) o z + x o (y* o z) - y* o (x o z).
Hermitian3 albert_triple(const Hermitian3& x, const Hermitian3& y, const Hermitian3& z);

/// Coordinates in the trace-orthonormal basis shared with factors.hpp
/// (3 diagonal units, then (1,2),(1,3),(2,3) octonion units / sqrt(2)).
Vector27 herm_coordinates(const Hermitian3& a);
Hermitian3 herm_from_coordinates(const Vector27& c);

/// Matrix of left Jordan multiplication x -> w o x in coordinates.
Matrix27 jordan_left_matrix(const Hermitian3& w);

/// Matrix of x -> {a, b, x} = L(a o b*) + [L(a), L(b*)] in coordinates;
/// hermitian for b = a.
Matrix27 albert_box_matrix(const Hermitian3& a, const Hermitian3& b);

/// M_{1,2}(O) sits in H_3(O) as the (1,2)/(1,3) slot pair.
Hermitian3 embed_pair(const BioctonionPair& p);
/// Reads the slots back; fails if mass leaked outside them.
BioctonionPair project_pair(const Hermitian3& h, double tol = 1e-9);

}  // namespace cartan
