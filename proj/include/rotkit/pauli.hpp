#ifndef ROTKIT_PAULI_HPP
#define ROTKIT_PAULI_HPP

#include "rotkit/linalg.hpp"

namespace rotkit {

class Su2Op;

enum class PauliAxis { I, X, Y, Z };

/// Coordinates of an SU(2) operator in the basis (Id, iX, iY, iZ): a point
/// on the unit 3-sphere, n_i^2 + n_x^2 + n_y^2 + n_z^2 = 1.
struct PauliCoords {
  double n_i;
  double n_x;
  double n_y;
  double n_z;

  PauliCoords(double ni, double nx, double ny, double nz, const Tolerance& tol = {});
  double vector_norm() const { return std::sqrt(n_x * n_x + n_y * n_y + n_z * n_z); }
};

/// The Pauli matrix for the given axis (Id for I).
Mat2C pauli_matrix(PauliAxis axis);

/// n_x.X + n_y.Y + n_z.Z, i.e. (n_z, n_x - i n_y; n_x + i n_y, -n_z).
/// Linear in n; traceless and Hermitian for any real n.
Mat2C dot_sigma(const Vec3& n);

/// Inverse of dot_sigma. Requires a Hermitian traceless matrix (within
/// eps_eq); throws NotInPauliSpan otherwise.
Vec3 extract_vector(const Mat2C& m, const Tolerance& tol = {});

/// Pauli-basis coordinates of an SU(2) operator: V = n_i.Id + i(n_x.X + n_y.Y + n_z.Z).
PauliCoords pauli_coords(const Su2Op& v);

}  // namespace rotkit

#endif
