#include "rotkit/cover.hpp"

#include "rotkit/pauli.hpp"
#include "rotkit/verify.hpp"

namespace rotkit::cover {

So3Rot project(const Su2Op& v, const Tolerance& tol) {
  const Mat2C vm = su2::to_matrix(v);
  const Mat2C vd = dagger(vm);
  Mat3R m;
  m.set_column(0, extract_vector(vm * pauli_matrix(PauliAxis::X) * vd, tol));
  m.set_column(1, extract_vector(vm * pauli_matrix(PauliAxis::Y) * vd, tol));
  m.set_column(2, extract_vector(vm * pauli_matrix(PauliAxis::Z) * vd, tol));
  return So3Rot(m, tol);
}

std::pair<Su2Op, Su2Op> lift(const So3Rot& r, const Tolerance& tol) {
  const AxisAngle aa = so3::to_axis_angle(r, tol);
  // theta in [0, pi], so the first sheet has Re a = cos(theta/2) >= 0.
  const Su2Op v = su2::from_axis_angle(aa.axis, aa.theta);
  return {v, -v};
}

ComposedReflections compose_reflections(const UnitVec3& n, const UnitVec3& m,
                                        const Tolerance& tol) {
  if (cross(n.vec(), m.vec()).norm() <= tol.eps_unit)
    throw ParallelMirrors("mirror axes are (anti)parallel; composition degenerates to +/-Id");
  const Su2Op op = su2::mul(su2::reflection(m), su2::reflection(n), tol);
  return {op, su2::to_axis_angle(op, tol)};
}

MirrorDecomposition decompose_to_reflections(const Su2Op& v, const Tolerance& tol) {
  const PauliCoords pc = pauli_coords(v);
  if (pc.vector_norm() <= tol.eps_unit)
    throw CentralElement("operator is within tolerance of +/-Id; no unique axis");
  const AxisAngle aa = su2::to_axis_angle(v, tol);
  const Vec3 u = aa.axis.vec();

  // First mirror: lowest-index basis vector projected onto the plane
  // orthogonal to the axis.
  Vec3 first_raw(0, 0, 0);
  for (int j = 0; j < 3; ++j) {
    const Vec3 e(j == 0 ? 1.0 : 0.0, j == 1 ? 1.0 : 0.0, j == 2 ? 1.0 : 0.0);
    const Vec3 p = e - dot(e, u) * u;
    if (p.norm() > tol.eps_unit) {
      first_raw = p;
      break;
    }
  }
  const UnitVec3 first = UnitVec3::normalized(first_raw, tol);
  const UnitVec3 second =
      UnitVec3::normalized(so3::rodrigues_apply(aa.axis, aa.theta / 2.0, first.vec()), tol);

  const Su2Op recomposed = su2::mul(su2::reflection(second), su2::reflection(first), tol);
  const int sign = (max_abs_diff(recomposed, v) <= max_abs_diff(recomposed, -v)) ? 1 : -1;
  return {ReflectionPair{first, second}, sign};
}

CheckReport check_homomorphism(std::int64_t samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw Error("check_homomorphism: samples must be >= 1");
  verify::Rng rng(seed);
  CheckReport report{samples, 0.0, 0, seed};
  for (std::int64_t i = 0; i < samples; ++i) {
    const Su2Op v = verify::random_su2(rng);
    const Su2Op w = verify::random_su2(rng);
    const double res = max_abs_diff(project(su2::mul(v, w)), so3::mul(project(v), project(w)));
    report.max_residual = std::max(report.max_residual, res);
    if (res > tol) ++report.failures;
  }
  return report;
}

}  // namespace rotkit::cover
