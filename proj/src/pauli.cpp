#include "rotkit/pauli.hpp"

#include "rotkit/su2.hpp"

namespace rotkit {

PauliCoords::PauliCoords(double ni, double nx, double ny, double nz, const Tolerance& tol)
    : n_i(ni), n_x(nx), n_y(ny), n_z(nz) {
  if (!(std::isfinite(ni) && std::isfinite(nx) && std::isfinite(ny) && std::isfinite(nz)))
    throw NonFinite("PauliCoords: components must be finite");
  const double n = std::sqrt(ni * ni + nx * nx + ny * ny + nz * nz);
  if (std::abs(n - 1.0) > tol.eps_unit)
    throw NotSpecialUnitary("PauliCoords: norm " + std::to_string(n) +
                            " is not on the unit 3-sphere");
  if (std::abs(n - 1.0) > tol.eps_eq) {
    const double inv = 1.0 / n;
    n_i *= inv;
    n_x *= inv;
    n_y *= inv;
    n_z *= inv;
  }
}

Mat2C pauli_matrix(PauliAxis axis) {
  Mat2C m;
  switch (axis) {
    case PauliAxis::I:
      m.m[0][0] = m.m[1][1] = Complex(1, 0);
      break;
    case PauliAxis::X:
      m.m[0][1] = m.m[1][0] = Complex(1, 0);
      break;
    case PauliAxis::Y:
      m.m[0][1] = Complex(0, -1);
      m.m[1][0] = Complex(0, 1);
      break;
    case PauliAxis::Z:
      m.m[0][0] = Complex(1, 0);
      m.m[1][1] = Complex(-1, 0);
      break;
  }
  return m;
}

Mat2C dot_sigma(const Vec3& n) {
  Mat2C m;
  m.m[0][0] = Complex(n.z, 0);
  m.m[0][1] = Complex(n.x, -n.y);
  m.m[1][0] = Complex(n.x, n.y);
  m.m[1][1] = Complex(-n.z, 0);
  return m;
}

Vec3 extract_vector(const Mat2C& m, const Tolerance& tol) {
  // Hermitian: diagonal real, off-diagonal conjugates. Traceless: m00 = -m11.
  const double herm = std::max({std::abs(m.m[0][0].imag()), std::abs(m.m[1][1].imag()),
                                max_abs_diff(m.m[0][1], std::conj(m.m[1][0]))});
  const double traceless = std::abs(m.trace());
  if (herm > tol.eps_eq || traceless > tol.eps_eq)
    throw NotInPauliSpan("matrix is not Hermitian-traceless (hermiticity residual " +
                         std::to_string(herm) + ", trace " + std::to_string(traceless) + ")");
  return {m.m[1][0].real(), m.m[1][0].imag(), m.m[0][0].real()};
}

PauliCoords pauli_coords(const Su2Op& v) {
  // a = n_i + i.n_z, b = n_y + i.n_x.
  return PauliCoords(v.a().real(), v.b().imag(), v.b().real(), v.a().imag());
}

}  // namespace rotkit
