#ifndef ROTKIT_BLOCH_HPP
#define ROTKIT_BLOCH_HPP

#include "rotkit/linalg.hpp"
#include "rotkit/pauli.hpp"

namespace rotkit {

/// Spherical coordinates on S^2: theta in [0, pi], phi in [0, 2pi).
struct Spherical {
  double theta;
  double phi;

  Spherical(double theta_, double phi_);
};

/// Pure qubit state (c0, c1) on the Z basis, unit norm, with a canonical
/// global phase: the first amplitude of modulus > eps_eq is real and >= 0.
class QubitState {
 public:
  QubitState(Complex c0, Complex c1, const Tolerance& tol = {});

  const Complex& c0() const { return c0_; }
  const Complex& c1() const { return c1_; }

 private:
  Complex c0_;
  Complex c1_;
};

inline double max_abs_diff(const QubitState& p, const QubitState& q) {
  return std::max(max_abs_diff(p.c0(), q.c0()), max_abs_diff(p.c1(), q.c1()));
}
inline bool approx_eq(const QubitState& p, const QubitState& q, double tol) {
  return max_abs_diff(p, q) <= tol;
}

/// <phi|psi>, conjugate-linear in the first argument.
Complex inner(const QubitState& phi, const QubitState& psi);

/// |psi><psi| as a matrix.
Mat2C outer(const QubitState& psi);

/// (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)).
UnitVec3 unit_from_spherical(const Spherical& s);

/// Inverse map; phi canonicalized to 0 at the poles (sin(theta) <= eps_eq).
Spherical spherical_from_unit(const UnitVec3& n, const Tolerance& tol = {});

/// The +1 eigenvector of dot_sigma(n): (cos(theta/2), e^{i phi} sin(theta/2)),
/// phase-canonicalized.
QubitState eig_up(const UnitVec3& n, const Tolerance& tol = {});

/// The -1 eigenvector of dot_sigma(n): (e^{-i phi} sin(theta/2), -cos(theta/2)),
/// phase-canonicalized.
QubitState eig_down(const UnitVec3& n, const Tolerance& tol = {});

/// <psi| sigma_axis |psi>; real, in [-1, 1]. PauliAxis::I gives the norm (1).
double expectation(const QubitState& psi, PauliAxis axis);

/// (<X>, <Y>, <Z>); unit for pure states.
UnitVec3 bloch_vector(const QubitState& psi, const Tolerance& tol = {});

/// <up_k | up_n>, the transition amplitude between the +1 eigenstates of
/// the two axis operators. Its modulus is cos of half the angle between the
/// axes.
Complex overlap_amplitude(const UnitVec3& k, const UnitVec3& n, const Tolerance& tol = {});

/// |<up_k | up_n>|^2, computed from amplitudes; equals (1 + <k,n>)/2.
double overlap_prob(const UnitVec3& k, const UnitVec3& n, const Tolerance& tol = {});

}  // namespace rotkit

#endif
