#ifndef ROTKIT_SU2_HPP
#define ROTKIT_SU2_HPP

#include "rotkit/axis_angle.hpp"
#include "rotkit/linalg.hpp"
#include "rotkit/pauli.hpp"

namespace rotkit {

/// Special-unitary 2x2 operator stored as the complex pair (a, b) of the
/// matrix (a, b; -conj(b), conj(a)), with |a|^2 + |b|^2 = 1 (the 3-sphere).
class Su2Op {
 public:
  Su2Op(Complex a, Complex b, const Tolerance& tol = {});

  static Su2Op identity() { return Su2Op(Complex(1, 0), Complex(0, 0)); }

  const Complex& a() const { return a_; }
  const Complex& b() const { return b_; }

  /// The central flip -V (same rotation, other cover sheet).
  Su2Op operator-() const { return Su2Op(-a_, -b_); }

 private:
  Complex a_;
  Complex b_;
};

inline double max_abs_diff(const Su2Op& u, const Su2Op& v) {
  return std::max(max_abs_diff(u.a(), v.a()), max_abs_diff(u.b(), v.b()));
}
inline bool approx_eq(const Su2Op& u, const Su2Op& v, double tol) {
  return max_abs_diff(u, v) <= tol;
}

namespace su2 {

/// V = cos(theta/2).Id + i.sin(theta/2).(n dot sigma). theta is reduced mod
/// 4pi; theta and theta + 2pi give distinct group elements (V vs -V).
Su2Op from_axis_angle(const UnitVec3& axis, double theta);

/// Matrix product; renormalizes onto the 3-sphere when drift exceeds eps_eq.
Su2Op mul(const Su2Op& v, const Su2Op& w, const Tolerance& tol = {});

/// The conjugate transpose, which is the group inverse.
Su2Op inverse(const Su2Op& v);

Mat2C to_matrix(const Su2Op& v);

/// Validates unitarity and unit determinant (within eps_unit), then reads
/// off (a, b). Throws NotSpecialUnitary naming the failed condition.
Su2Op from_matrix(const Mat2C& m, const Tolerance& tol = {});

/// Axis-angle of V with theta in [0, 2pi). Degenerate cases: near Id the
/// canonical axis is (0,0,1) with theta ~ 0; near -Id the axis is (0,0,1),
/// theta = 2pi, and is_minus_identity is set (no in-range theta exists).
AxisAngle to_axis_angle(const Su2Op& v, const Tolerance& tol = {});

/// The X/Y/Z rotation gates: R_axis(theta) = from_axis_angle(e_axis, theta)
/// in closed form. axis must not be I.
Su2Op rotation_gate(PauliAxis axis, double theta);

/// The axial symmetry i.(n dot sigma), equal to from_axis_angle(n, pi);
/// squares to -Id.
Su2Op reflection(const UnitVec3& n);

/// Truncated power series sum_{k<terms} (i.theta/2)^k (n dot sigma)^k / k!,
/// after exact 4pi reduction of theta. Series-based cross-check for
/// from_axis_angle; 30 terms reach ~1e-15 of the closed form for any theta.
Mat2C exp_series(const UnitVec3& n, double theta, int terms);

}  // namespace su2

inline Su2Op operator*(const Su2Op& v, const Su2Op& w) { return su2::mul(v, w); }

}  // namespace rotkit

#endif
