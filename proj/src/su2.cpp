#include "rotkit/su2.hpp"

#include <numbers>

#include "rotkit/pauli.hpp"

namespace rotkit {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}  // namespace

Su2Op::Su2Op(Complex a, Complex b, const Tolerance& tol) : a_(a), b_(b) {
  if (!(std::isfinite(a.real()) && std::isfinite(a.imag()) && std::isfinite(b.real()) &&
        std::isfinite(b.imag())))
    throw NonFinite("Su2Op: entries must be finite");
  const double n2 = std::norm(a_) + std::norm(b_);
  if (std::abs(n2 - 1.0) > tol.eps_unit)
    throw NotSpecialUnitary("Su2Op: |a|^2 + |b|^2 = " + std::to_string(n2) +
                            " is off the unit 3-sphere");
  if (std::abs(n2 - 1.0) > tol.eps_eq) {
    const double inv = 1.0 / std::sqrt(n2);
    a_ *= inv;
    b_ *= inv;
  }
}

namespace su2 {

Su2Op from_axis_angle(const UnitVec3& axis, double theta) {
  if (!std::isfinite(theta)) throw NonFinite("from_axis_angle: theta must be finite");
  double t = std::fmod(theta, kFourPi);
  if (t < 0.0) t += kFourPi;
  const double c = std::cos(t / 2.0);
  const double s = std::sin(t / 2.0);
  return Su2Op(Complex(c, axis.z() * s), Complex(axis.y() * s, axis.x() * s));
}

Su2Op mul(const Su2Op& v, const Su2Op& w, const Tolerance& tol) {
  // The constructor renormalizes onto the 3-sphere when drift exceeds eps_eq.
  return Su2Op(v.a() * w.a() - v.b() * std::conj(w.b()),
               v.a() * w.b() + v.b() * std::conj(w.a()), tol);
}

Su2Op inverse(const Su2Op& v) { return Su2Op(std::conj(v.a()), -v.b()); }

Mat2C to_matrix(const Su2Op& v) {
  Mat2C m;
  m.m[0][0] = v.a();
  m.m[0][1] = v.b();
  m.m[1][0] = -std::conj(v.b());
  m.m[1][1] = std::conj(v.a());
  return m;
}

Su2Op from_matrix(const Mat2C& m, const Tolerance& tol) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(std::isfinite(m.m[i][j].real()) && std::isfinite(m.m[i][j].imag())))
        throw NonFinite("from_matrix: entries must be finite");
  const double unitary = max_abs_diff(dagger(m) * m, Mat2C::identity());
  if (unitary > tol.eps_unit)
    throw NotSpecialUnitary("matrix is not unitary (residual " + std::to_string(unitary) + ")");
  const Complex d = m.det();
  if (max_abs_diff(d, Complex(1, 0)) > tol.eps_unit)
    throw NotSpecialUnitary("matrix determinant " + std::to_string(d.real()) + " + " +
                            std::to_string(d.imag()) + "i differs from 1");
  return Su2Op(m.m[0][0], m.m[0][1], tol);
}

AxisAngle to_axis_angle(const Su2Op& v, const Tolerance& tol) {
  const PauliCoords pc = pauli_coords(v);
  const double vn = pc.vector_norm();
  const double theta = 2.0 * std::atan2(vn, pc.n_i);
  if (vn <= tol.eps_eq) {
    // Degenerate: Id (theta ~ 0) or -Id (theta = 2pi); canonical axis z.
    return AxisAngle{UnitVec3(0, 0, 1), theta, pc.n_i < 0.0};
  }
  return AxisAngle{UnitVec3(pc.n_x / vn, pc.n_y / vn, pc.n_z / vn, tol), theta, false};
}

Su2Op rotation_gate(PauliAxis axis, double theta) {
  if (!std::isfinite(theta)) throw NonFinite("rotation_gate: theta must be finite");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  switch (axis) {
    case PauliAxis::X:
      return Su2Op(Complex(c, 0), Complex(0, s));
    case PauliAxis::Y:
      return Su2Op(Complex(c, 0), Complex(s, 0));
    case PauliAxis::Z:
      return Su2Op(Complex(c, s), Complex(0, 0));
    case PauliAxis::I:
      break;
  }
  throw Error("rotation_gate: axis must be X, Y, or Z");
}

Su2Op reflection(const UnitVec3& n) {
  // i.(n dot sigma), exactly; equals from_axis_angle(n, pi).
  return Su2Op(Complex(0, n.z()), Complex(n.y(), n.x()));
}

Mat2C exp_series(const UnitVec3& n, double theta, int terms) {
  if (terms < 1) throw Error("exp_series: terms must be >= 1");
  if (!std::isfinite(theta)) throw NonFinite("exp_series: theta must be finite");
  // Exact 4pi periodicity of the exponential keeps the summation argument in
  // [-pi, pi] in half-angle, where 30 terms reach ~1e-15.
  const double t = std::remainder(theta, kFourPi);
  const Mat2C m = dot_sigma(n.vec());
  const Complex z(0.0, t / 2.0);
  Mat2C sum = Mat2C::identity();
  Mat2C term = Mat2C::identity();
  for (int k = 1; k < terms; ++k) {
    term = (z / static_cast<double>(k)) * (term * m);
    sum = sum + term;
  }
  return sum;
}

}  // namespace su2
}  // namespace rotkit
