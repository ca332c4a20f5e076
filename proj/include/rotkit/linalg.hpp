#ifndef ROTKIT_LINALG_HPP
#define ROTKIT_LINALG_HPP

#include <cmath>
#include <complex>

#include "rotkit/errors.hpp"

namespace rotkit {

using Complex = std::complex<double>;

/// Shared tolerance policy, threaded explicitly through every module.
///  - eps_unit gates norm constraints at construction boundaries,
///  - eps_eq gates identity checks and renormalization triggers.
struct Tolerance {
  double eps_unit = 1e-9;
  double eps_eq = 1e-12;

  void validate() const {
    if (!(0.0 < eps_eq && eps_eq <= eps_unit && eps_unit < 1.0))
      throw Error("tolerance: require 0 < eps_eq <= eps_unit < 1");
  }
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(z)))
      throw NonFinite("Vec3: components must be finite");
  }

  double norm_sq() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
};

inline Vec3 operator+(const Vec3& u, const Vec3& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
inline Vec3 operator-(const Vec3& u, const Vec3& v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
inline Vec3 operator-(const Vec3& u) { return {-u.x, -u.y, -u.z}; }
inline Vec3 operator*(double k, const Vec3& v) { return {k * v.x, k * v.y, k * v.z}; }
inline Vec3 operator*(const Vec3& v, double k) { return k * v; }

inline double dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

/// Right-handed cross product u ^ v.
inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

/// Unit vector on S^2. Construction accepts norms within eps_unit of 1
/// (renormalizing when the drift exceeds eps_eq) and rejects anything else.
class UnitVec3 {
 public:
  UnitVec3(double x, double y, double z, const Tolerance& tol = {}) : UnitVec3(Vec3(x, y, z), tol) {}

  explicit UnitVec3(const Vec3& v, const Tolerance& tol = {}) : v_(v) {
    const double n = v.norm();
    if (std::abs(n - 1.0) > tol.eps_unit)
      throw NonUnitAxis("UnitVec3: norm " + std::to_string(n) + " deviates from 1 beyond eps_unit");
    if (std::abs(n - 1.0) > tol.eps_eq) v_ = (1.0 / n) * v_;
  }

  /// Normalizes an arbitrary vector; rejects (near-)zero input.
  static UnitVec3 normalized(const Vec3& v, const Tolerance& tol = {}) {
    const double n = v.norm();
    if (n <= tol.eps_unit) throw ZeroAxis("cannot normalize a (near-)zero vector");
    return UnitVec3((1.0 / n) * v, tol);
  }

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }

  UnitVec3 operator-() const {
    UnitVec3 r(*this);
    r.v_ = -r.v_;
    return r;
  }

 private:
  Vec3 v_;
};

/// 2x2 complex matrix, row-major.
struct Mat2C {
  Complex m[2][2] = {{Complex(0, 0), Complex(0, 0)}, {Complex(0, 0), Complex(0, 0)}};

  static Mat2C identity() {
    Mat2C r;
    r.m[0][0] = r.m[1][1] = Complex(1, 0);
    return r;
  }

  Complex& operator()(int r, int c) { return m[r][c]; }
  const Complex& operator()(int r, int c) const { return m[r][c]; }

  Complex trace() const { return m[0][0] + m[1][1]; }
  Complex det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

inline Mat2C operator*(const Mat2C& a, const Mat2C& b) {
  Mat2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return r;
}

inline Mat2C operator+(const Mat2C& a, const Mat2C& b) {
  Mat2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

inline Mat2C operator-(const Mat2C& a, const Mat2C& b) {
  Mat2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

inline Mat2C operator*(const Complex& k, const Mat2C& a) {
  Mat2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = k * a.m[i][j];
  return r;
}

/// Conjugate transpose.
inline Mat2C dagger(const Mat2C& a) {
  Mat2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = std::conj(a.m[j][i]);
  return r;
}

/// 3x3 real matrix, row-major.
struct Mat3R {
  double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

  static Mat3R identity() {
    Mat3R r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }

  double& operator()(int r, int c) { return m[r][c]; }
  const double& operator()(int r, int c) const { return m[r][c]; }

  double trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  Mat3R transposed() const {
    Mat3R r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  Vec3 column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
  void set_column(int j, const Vec3& v) {
    m[0][j] = v.x;
    m[1][j] = v.y;
    m[2][j] = v.z;
  }
};

inline Mat3R operator*(const Mat3R& a, const Mat3R& b) {
  Mat3R r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
  return r;
}

inline Vec3 operator*(const Mat3R& a, const Vec3& v) {
  return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
          a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
          a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}

// Max-abs entrywise differences; the residual metric used everywhere.
inline double max_abs_diff(double a, double b) { return std::abs(a - b); }
inline double max_abs_diff(const Complex& a, const Complex& b) {
  return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}
inline double max_abs_diff(const Vec3& a, const Vec3& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}
inline double max_abs_diff(const Mat2C& a, const Mat2C& b) {
  double r = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r = std::max(r, max_abs_diff(a.m[i][j], b.m[i][j]));
  return r;
}
inline double max_abs_diff(const Mat3R& a, const Mat3R& b) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a.m[i][j] - b.m[i][j]));
  return r;
}

inline bool approx_eq(double a, double b, double tol) { return max_abs_diff(a, b) <= tol; }
inline bool approx_eq(const Complex& a, const Complex& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}
inline bool approx_eq(const Vec3& a, const Vec3& b, double tol) { return max_abs_diff(a, b) <= tol; }
inline bool approx_eq(const Mat2C& a, const Mat2C& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}
inline bool approx_eq(const Mat3R& a, const Mat3R& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

}  // namespace rotkit

#endif
