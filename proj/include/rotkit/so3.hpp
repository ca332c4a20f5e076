#ifndef ROTKIT_SO3_HPP
#define ROTKIT_SO3_HPP

#include "rotkit/axis_angle.hpp"
#include "rotkit/linalg.hpp"

namespace rotkit {

/// Proper rotation of 3-space: a 3x3 real matrix with M.M^T = Id and
/// det M = 1, both within eps_unit at construction.
class So3Rot {
 public:
  explicit So3Rot(const Mat3R& m, const Tolerance& tol = {});

  static So3Rot identity() { return So3Rot(Mat3R::identity()); }

  const Mat3R& mat() const { return m_; }
  Vec3 apply(const Vec3& x) const { return m_ * x; }

 private:
  Mat3R m_;
};

inline double max_abs_diff(const So3Rot& r, const So3Rot& s) {
  return max_abs_diff(r.mat(), s.mat());
}
inline bool approx_eq(const So3Rot& r, const So3Rot& s, double tol) {
  return max_abs_diff(r, s) <= tol;
}

namespace so3 {

/// Rotation of x through theta about unit n:
///   cos(theta).x + (1-cos(theta)).<x,n>.n + sin(theta).(x ^ n).
/// Note the x ^ n cross term: with this convention the conjugation map on
/// operators and this rotation agree parameter-for-parameter. The n ^ x
/// variant equals this one with n negated.
Vec3 rodrigues_apply(const UnitVec3& n, double theta, const Vec3& x);

/// Matrix whose columns are rodrigues_apply of the basis vectors.
So3Rot from_axis_angle(const UnitVec3& n, double theta);

/// Matrix product; one Gram-Schmidt pass on columns when the orthogonality
/// residual exceeds eps_eq.
So3Rot mul(const So3Rot& r, const So3Rot& s, const Tolerance& tol = {});

/// Axis-angle with theta = arccos((trace-1)/2) in [0, pi]. Axis from the
/// antisymmetric part for generic theta; from the dominant column of
/// (R + Id)/2 (first nonzero component forced positive) when theta is within
/// eps_unit of pi; canonically (0,0,1) when theta <= eps_eq.
AxisAngle to_axis_angle(const So3Rot& r, const Tolerance& tol = {});

/// Both rotation conditions (orthogonality, unit determinant) within tol.
bool is_rotation(const Mat3R& m, double tol);

}  // namespace so3

inline So3Rot operator*(const So3Rot& r, const So3Rot& s) { return so3::mul(r, s); }

}  // namespace rotkit

#endif
