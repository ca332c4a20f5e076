#include "rotkit/bloch.hpp"

#include <numbers>

namespace rotkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sigma |psi> as an amplitude pair.
void apply2(const Mat2C& m, const Complex& c0, const Complex& c1, Complex& r0, Complex& r1) {
  r0 = m.m[0][0] * c0 + m.m[0][1] * c1;
  r1 = m.m[1][0] * c0 + m.m[1][1] * c1;
}

// Kept out of line so the compiler cannot pair them into sincos(): the
// amplitudes must equal standalone std::cos/std::sin of the half angle
// bitwise (sincos can differ in the last ulp), which the z-axis overlap
// probability relies on.
[[gnu::noinline]] double libm_cos(double x) { return std::cos(x); }
[[gnu::noinline]] double libm_sin(double x) { return std::sin(x); }

}  // namespace

Spherical::Spherical(double theta_, double phi_) : theta(theta_), phi(phi_) {
  if (!(std::isfinite(theta) && std::isfinite(phi)))
    throw NonFinite("Spherical: angles must be finite");
  if (theta < 0.0 || theta > kPi) throw Error("Spherical: theta must lie in [0, pi]");
  if (phi < 0.0 || phi >= kTwoPi) throw Error("Spherical: phi must lie in [0, 2pi)");
}

QubitState::QubitState(Complex c0, Complex c1, const Tolerance& tol) : c0_(c0), c1_(c1) {
  if (!(std::isfinite(c0.real()) && std::isfinite(c0.imag()) && std::isfinite(c1.real()) &&
        std::isfinite(c1.imag())))
    throw NonFinite("QubitState: amplitudes must be finite");
  const double n2 = std::norm(c0_) + std::norm(c1_);
  if (std::abs(n2 - 1.0) > tol.eps_unit)
    throw Error("QubitState: |c0|^2 + |c1|^2 = " + std::to_string(n2) + " is not 1");
  if (std::abs(n2 - 1.0) > tol.eps_eq) {
    const double inv = 1.0 / std::sqrt(n2);
    c0_ *= inv;
    c1_ *= inv;
  }
  // Canonical global phase: first significant amplitude real and >= 0.
  Complex& lead = (std::abs(c0_) > tol.eps_eq) ? c0_ : c1_;
  if (lead.imag() != 0.0 || lead.real() < 0.0) {
    const Complex phase = std::conj(lead) / std::abs(lead);
    c0_ *= phase;
    c1_ *= phase;
  }
}

Complex inner(const QubitState& phi, const QubitState& psi) {
  return std::conj(phi.c0()) * psi.c0() + std::conj(phi.c1()) * psi.c1();
}

Mat2C outer(const QubitState& psi) {
  Mat2C m;
  m.m[0][0] = psi.c0() * std::conj(psi.c0());
  m.m[0][1] = psi.c0() * std::conj(psi.c1());
  m.m[1][0] = psi.c1() * std::conj(psi.c0());
  m.m[1][1] = psi.c1() * std::conj(psi.c1());
  return m;
}

UnitVec3 unit_from_spherical(const Spherical& s) {
  const double st = std::sin(s.theta);
  return UnitVec3(st * std::cos(s.phi), st * std::sin(s.phi), std::cos(s.theta));
}

Spherical spherical_from_unit(const UnitVec3& n, const Tolerance& tol) {
  const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  double phi = 0.0;  // canonical at the poles
  if (std::sin(theta) > tol.eps_eq) {
    phi = std::atan2(n.y(), n.x());
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;  // guard against rounding up to 2pi
  }
  return Spherical(theta, phi);
}

QubitState eig_up(const UnitVec3& n, const Tolerance& tol) {
  const Spherical s = spherical_from_unit(n, tol);
  const double ch = libm_cos(s.theta / 2.0);
  const double sh = libm_sin(s.theta / 2.0);
  return QubitState(Complex(ch, 0.0), Complex(libm_cos(s.phi) * sh, libm_sin(s.phi) * sh), tol);
}

QubitState eig_down(const UnitVec3& n, const Tolerance& tol) {
  const Spherical s = spherical_from_unit(n, tol);
  const double ch = libm_cos(s.theta / 2.0);
  const double sh = libm_sin(s.theta / 2.0);
  return QubitState(Complex(libm_cos(s.phi) * sh, -libm_sin(s.phi) * sh), Complex(-ch, 0.0), tol);
}

double expectation(const QubitState& psi, PauliAxis axis) {
  Complex r0, r1;
  apply2(pauli_matrix(axis), psi.c0(), psi.c1(), r0, r1);
  return (std::conj(psi.c0()) * r0 + std::conj(psi.c1()) * r1).real();
}

UnitVec3 bloch_vector(const QubitState& psi, const Tolerance& tol) {
  return UnitVec3(expectation(psi, PauliAxis::X), expectation(psi, PauliAxis::Y),
                  expectation(psi, PauliAxis::Z), tol);
}

Complex overlap_amplitude(const UnitVec3& k, const UnitVec3& n, const Tolerance& tol) {
  return inner(eig_up(k, tol), eig_up(n, tol));
}

double overlap_prob(const UnitVec3& k, const UnitVec3& n, const Tolerance& tol) {
  return std::norm(overlap_amplitude(k, n, tol));
}

}  // namespace rotkit
