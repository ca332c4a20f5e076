#include "rotkit/so3.hpp"

#include <algorithm>
#include <numbers>

namespace rotkit {

namespace {

double orthogonality_residual(const Mat3R& m) {
  return max_abs_diff(m * m.transposed(), Mat3R::identity());
}

// One Gram-Schmidt pass over the columns.
Mat3R reorthonormalized(const Mat3R& m) {
  Vec3 c0 = m.column(0);
  c0 = (1.0 / c0.norm()) * c0;
  Vec3 c1 = m.column(1) - dot(m.column(1), c0) * c0;
  c1 = (1.0 / c1.norm()) * c1;
  Vec3 c2 = m.column(2) - dot(m.column(2), c0) * c0;
  c2 = c2 - dot(c2, c1) * c1;
  c2 = (1.0 / c2.norm()) * c2;
  Mat3R r;
  r.set_column(0, c0);
  r.set_column(1, c1);
  r.set_column(2, c2);
  return r;
}

}  // namespace

So3Rot::So3Rot(const Mat3R& m, const Tolerance& tol) : m_(m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!std::isfinite(m.m[i][j])) throw NotRotation("So3Rot: entries must be finite");
  const double ortho = orthogonality_residual(m);
  if (ortho > tol.eps_unit)
    throw NotRotation("So3Rot: M.M^T deviates from Id by " + std::to_string(ortho));
  const double d = m.det();
  if (std::abs(d - 1.0) > tol.eps_unit)
    throw NotRotation("So3Rot: determinant " + std::to_string(d) +
                      " differs from 1 (improper transform?)");
}

namespace so3 {

Vec3 rodrigues_apply(const UnitVec3& n, double theta, const Vec3& x) {
  if (!std::isfinite(theta)) throw NonFinite("rodrigues_apply: theta must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * x + ((1.0 - c) * dot(x, n.vec())) * n.vec() + s * cross(x, n.vec());
}

So3Rot from_axis_angle(const UnitVec3& n, double theta) {
  Mat3R m;
  m.set_column(0, rodrigues_apply(n, theta, Vec3(1, 0, 0)));
  m.set_column(1, rodrigues_apply(n, theta, Vec3(0, 1, 0)));
  m.set_column(2, rodrigues_apply(n, theta, Vec3(0, 0, 1)));
  return So3Rot(m);
}

So3Rot mul(const So3Rot& r, const So3Rot& s, const Tolerance& tol) {
  Mat3R p = r.mat() * s.mat();
  if (orthogonality_residual(p) > tol.eps_eq) p = reorthonormalized(p);
  return So3Rot(p, tol);
}

AxisAngle to_axis_angle(const So3Rot& r, const Tolerance& tol) {
  const Mat3R& m = r.mat();
  // theta = arccos((trace-1)/2), evaluated as atan2(sin, cos) with sin taken
  // from the antisymmetric part; acos alone loses half the digits near 0/pi.
  const double ct = std::clamp((m.trace() - 1.0) / 2.0, -1.0, 1.0);
  const Vec3 antisym(m.m[1][2] - m.m[2][1], m.m[2][0] - m.m[0][2], m.m[0][1] - m.m[1][0]);
  const double theta = std::atan2(antisym.norm() / 2.0, ct);

  if (theta <= tol.eps_eq) return AxisAngle{UnitVec3(0, 0, 1), theta, false};

  if (std::numbers::pi - theta <= tol.eps_unit) {
    // Half turn: R = 2.n.n^T - Id, so (R + Id)/2 = n.n^T; the dominant
    // column (largest diagonal entry) is n scaled by its largest component.
    Mat3R b;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b.m[i][j] = (m.m[i][j] + (i == j ? 1.0 : 0.0)) / 2.0;
    int dominant = 0;
    for (int j = 1; j < 3; ++j)
      if (b.m[j][j] > b.m[dominant][dominant]) dominant = j;
    UnitVec3 axis = UnitVec3::normalized(b.column(dominant), tol);
    // Deterministic representative: first nonzero component positive.
    const double comps[3] = {axis.x(), axis.y(), axis.z()};
    for (double c : comps) {
      if (std::abs(c) > 1e-8) {
        if (c < 0.0) axis = -axis;
        break;
      }
    }
    return AxisAngle{axis, theta, false};
  }

  // Generic case: the antisymmetric part of R is -sin(theta) times the
  // cross-product matrix of the axis (x ^ n convention).
  return AxisAngle{UnitVec3::normalized((1.0 / (2.0 * std::sin(theta))) * antisym, tol), theta,
                   false};
}

bool is_rotation(const Mat3R& m, double tol) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!std::isfinite(m.m[i][j])) return false;
  return orthogonality_residual(m) <= tol && std::abs(m.det() - 1.0) <= tol;
}

}  // namespace so3
}  // namespace rotkit
