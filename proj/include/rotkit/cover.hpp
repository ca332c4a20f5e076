#ifndef ROTKIT_COVER_HPP
#define ROTKIT_COVER_HPP

#include <cstdint>
#include <utility>

#include "rotkit/so3.hpp"
#include "rotkit/su2.hpp"

namespace rotkit {

/// Two mirror axes; the composed operation applies `first` then `second`.
struct ReflectionPair {
  UnitVec3 first;
  UnitVec3 second;
};

/// Outcome of one randomized identity check.
struct CheckReport {
  std::int64_t samples = 0;
  double max_residual = 0.0;
  std::int64_t failures = 0;
  std::uint64_t seed = 0;
};

/// SU(2) product of two reflections together with its own axis-angle.
struct ComposedReflections {
  Su2Op op;
  AxisAngle axis_angle;
};

/// Mirror pair recomposing to sign * V.
struct MirrorDecomposition {
  ReflectionPair mirrors;
  int sign;
};

namespace cover {

/// The covering map SU(2) -> SO(3) by conjugation: column j of the result is
/// extract_vector(V . sigma_j . V^dagger). Kernel {Id, -Id}.
So3Rot project(const Su2Op& v, const Tolerance& tol = {});

/// The two preimages (V, -V) of a rotation, with project(V) = R. The first
/// element is the principal sheet (theta in [0, pi], Re a >= 0).
std::pair<Su2Op, Su2Op> lift(const So3Rot& r, const Tolerance& tol = {});

/// reflection(m) . reflection(n) plus its axis-angle (taken from the
/// composed operator itself). The mirrors must not be (anti)parallel.
/// The product equals -(n.m).Id + i.(n^m) dot sigma, a rotation through
/// twice the mirror separation angle.
ComposedReflections compose_reflections(const UnitVec3& n, const UnitVec3& m,
                                        const Tolerance& tol = {});

/// Splits a non-central V into two mirrors: n is the lowest-index basis
/// vector projected onto the plane orthogonal to V's axis, m is n rotated by
/// half of V's angle about the axis. Recomposition gives sign * V.
MirrorDecomposition decompose_to_reflections(const Su2Op& v, const Tolerance& tol = {});

/// Draws `samples` Haar pairs (V, W) and checks
/// project(V.W) = project(V).project(W) entrywise against tol.
CheckReport check_homomorphism(std::int64_t samples, std::uint64_t seed, double tol);

}  // namespace cover
}  // namespace rotkit

#endif
