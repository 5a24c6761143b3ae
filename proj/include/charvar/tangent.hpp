#pragma once

#include <array>
#include <utility>
#include <vector>

#include "charvar/gaussian_rational.hpp"

namespace charvar {

/// A surface-group representation into SL2 over Q(i): matrices
/// (A_1, B_1, ..., A_g, B_g) with z * prod [A_i, B_i] = 1 exactly.
struct SurfaceTuple {
  int g = 2;
  std::vector<std::pair<Mat2, Mat2>> pairs;
  int twist = 1;  // +1 or -1, the central element z
};

/// Throws ValidationError unless every matrix has determinant 1 and the
/// twisted product of commutators is exactly the identity.
void validate_tuple(const SurfaceTuple& t);

/// Irreducible witness: the quaternion-group representation. Untwisted uses
/// two nontrivial handles whose commutators are both -1; twisted (z = -1)
/// uses one. Remaining handles carry identity matrices.
SurfaceTuple quaternion_tuple(int g, bool twisted);

/// The tuple with every matrix equal to the identity (z = 1).
SurfaceTuple identity_tuple(int g);

/// Adjoint operator of m on sl2 in the ordered basis {H, E, F}.
QIMatrix ad_operator(const Mat2& m);

/// Coordinates of a traceless 2x2 matrix in the basis {H, E, F}.
std::array<QI, 3> sl2_coords(const Mat2& x);
Mat2 sl2_from_coords(const std::array<QI, 3>& c);

/// Dimension of {X in sl2 : Ad_rho(gamma) X = X for all generators}.
long centralizer_dim(const SurfaceTuple& t);

/// The 3 x 6g differential of the relation map at the tuple, columns grouped
/// (a_1, b_1, ..., a_g, b_g): the a_i block is P_(i-1) (1 - H_i T_i) and the
/// b_i block is P_(i-1) (S_i - H_i), where S_i, T_i are the adjoint operators
/// of A_i, B_i, H_i that of [A_i, B_i], and P_(i-1) = H_1 ... H_(i-1).
QIMatrix dmu_matrix(const SurfaceTuple& t);

/// 2g dim(sl2) - rank(dmu).
long tangent_dim(const SurfaceTuple& t);

/// Checks that the first-order term in epsilon of
/// z * prod [(1 + eps a_i) A_i, (1 + eps b_i) B_i], expanded exactly over
/// dual numbers, equals dmu_matrix(t) applied to the direction (a_i, b_i)_i.
bool first_order_matches(const SurfaceTuple& t, const std::vector<Mat2>& a,
                         const std::vector<Mat2>& b);

}  // namespace charvar
