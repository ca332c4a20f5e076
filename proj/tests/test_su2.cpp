#include <numbers>

#include "doctest.h"
#include "rotkit/su2.hpp"
#include "rotkit/verify.hpp"

using namespace rotkit;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kFourPi = 4.0 * kPi;

// Independent matrix-product oracle: plain triple loop.
Mat2C naive_mul(const Mat2C& a, const Mat2C& b) {
  Mat2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex acc(0, 0);
      for (int k = 0; k < 2; ++k) acc += a.m[i][k] * b.m[k][j];
      r.m[i][j] = acc;
    }
  return r;
}

}  // namespace

TEST_CASE("Su2Op construction enforces the 3-sphere") {
  CHECK_NOTHROW(Su2Op(Complex(1, 0), Complex(0, 0)));
  CHECK_THROWS_AS(Su2Op(Complex(2, 0), Complex(0, 0)), NotSpecialUnitary);
  CHECK_THROWS_AS(Su2Op(Complex(std::nan(""), 0), Complex(0, 0)), NonFinite);
  const Su2Op nudged(Complex(1.0 + 1e-10, 0), Complex(0, 0));
  CHECK(std::abs(std::norm(nudged.a()) + std::norm(nudged.b()) - 1.0) <= 1e-15);
}

TEST_CASE("from_axis_angle: center and z-axis closed forms") {
  const UnitVec3 z(0, 0, 1);
  verify::Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const UnitVec3 n = verify::random_unit_vec(rng);
    CHECK(max_abs_diff(su2::from_axis_angle(n, 0.0), Su2Op::identity()) == 0.0);
    CHECK(max_abs_diff(su2::from_axis_angle(n, kTwoPi), -Su2Op::identity()) <= 1e-15);
  }
  for (double theta : {0.1, 1.0, 2.5, 5.0}) {
    const Su2Op v = su2::from_axis_angle(z, theta);
    CHECK(max_abs_diff(v.a(), std::polar(1.0, theta / 2)) <= 1e-15);
    CHECK(max_abs_diff(v.b(), Complex(0, 0)) == 0.0);
  }
  CHECK_THROWS_AS(su2::from_axis_angle(z, std::numeric_limits<double>::infinity()), NonFinite);
}

TEST_CASE("mul: group unit, inverses, reflection square") {
  verify::Rng rng(32);
  const Su2Op v = verify::random_su2(rng);
  CHECK(max_abs_diff(su2::mul(v, Su2Op::identity()), v) == 0.0);
  CHECK(max_abs_diff(su2::mul(v, su2::inverse(v)), Su2Op::identity()) <= 1e-15);

  // (iX)^2 = -Id, cross-checked against the naive matrix-product oracle.
  const Su2Op ix = su2::reflection(UnitVec3(1, 0, 0));
  const Su2Op sq = su2::mul(ix, ix);
  CHECK(max_abs_diff(sq, -Su2Op::identity()) == 0.0);
  const Mat2C oracle = naive_mul(su2::to_matrix(ix), su2::to_matrix(ix));
  CHECK(max_abs_diff(su2::to_matrix(sq), oracle) == 0.0);

  // mul agrees with the matrix product for random operands.
  for (int i = 0; i < 1000; ++i) {
    const Su2Op p = verify::random_su2(rng);
    const Su2Op q = verify::random_su2(rng);
    CHECK(max_abs_diff(su2::to_matrix(su2::mul(p, q)),
                       naive_mul(su2::to_matrix(p), su2::to_matrix(q))) <= 1e-15);
  }
}

TEST_CASE("inverse: dagger oracle and axis-flip identity") {
  CHECK(max_abs_diff(su2::inverse(Su2Op::identity()), Su2Op::identity()) == 0.0);

  verify::Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    const Su2Op v = verify::random_su2(rng);
    CHECK(max_abs_diff(su2::to_matrix(su2::inverse(v)), dagger(su2::to_matrix(v))) == 0.0);
  }
  for (int i = 0; i < 500; ++i) {
    const UnitVec3 n = verify::random_unit_vec(rng);
    const double theta = rng.uniform(0.0, kTwoPi);
    CHECK(max_abs_diff(su2::inverse(su2::from_axis_angle(n, theta)),
                       su2::from_axis_angle(-n, theta)) <= 1e-15);
  }

  // i.Z inverts to -i.Z.
  const Su2Op iz = su2::reflection(UnitVec3(0, 0, 1));
  CHECK(max_abs_diff(su2::inverse(iz), -iz) == 0.0);
}

TEST_CASE("to_matrix / from_matrix") {
  CHECK(max_abs_diff(su2::from_matrix(Mat2C::identity()), Su2Op::identity()) == 0.0);

  // X has determinant -1: rejected with the determinant named.
  CHECK_THROWS_WITH_AS(su2::from_matrix(pauli_matrix(PauliAxis::X)),
                       doctest::Contains("determinant"), NotSpecialUnitary);
  // det(X) really is -1 (oracle for the case above).
  CHECK(pauli_matrix(PauliAxis::X).det() == Complex(-1, 0));

  // A non-unitary matrix is rejected before the determinant check.
  Mat2C scaled = Complex(2, 0) * Mat2C::identity();
  CHECK_THROWS_WITH_AS(su2::from_matrix(scaled), doctest::Contains("unitary"), NotSpecialUnitary);

  // i.X is special unitary: a = 0, b = i.
  const Mat2C ix = Complex(0, 1) * pauli_matrix(PauliAxis::X);
  const Su2Op v = su2::from_matrix(ix);
  CHECK(v.a() == Complex(0, 0));
  CHECK(v.b() == Complex(0, 1));

  verify::Rng rng(34);
  for (int i = 0; i < 500; ++i) {
    const Su2Op w = verify::random_su2(rng);
    CHECK(max_abs_diff(su2::from_matrix(su2::to_matrix(w)), w) <= 1e-15);
  }
}

TEST_CASE("to_axis_angle: degenerate representatives") {
  const AxisAngle id = su2::to_axis_angle(Su2Op::identity());
  CHECK(id.theta == 0.0);
  CHECK(max_abs_diff(id.axis.vec(), Vec3(0, 0, 1)) == 0.0);
  CHECK_FALSE(id.is_minus_identity);

  const AxisAngle minus = su2::to_axis_angle(-Su2Op::identity());
  CHECK(minus.theta == doctest::Approx(kTwoPi));
  CHECK(max_abs_diff(minus.axis.vec(), Vec3(0, 0, 1)) == 0.0);
  CHECK(minus.is_minus_identity);
  // The boundary representative still reconstructs -Id.
  CHECK(max_abs_diff(su2::from_axis_angle(minus.axis, minus.theta), -Su2Op::identity()) <= 1e-15);

  const AxisAngle half = su2::to_axis_angle(su2::reflection(UnitVec3(0, 0, 1)));
  CHECK(half.theta == doctest::Approx(kPi));
  CHECK(max_abs_diff(half.axis.vec(), Vec3(0, 0, 1)) <= 1e-15);
  CHECK_FALSE(half.is_minus_identity);
}

TEST_CASE("axis-angle roundtrip away from the degenerate angles") {
  verify::Rng rng(35);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const UnitVec3 n = verify::random_unit_vec(rng);
    const double theta = rng.uniform(0.01, kTwoPi - 0.01);
    const AxisAngle aa = su2::to_axis_angle(su2::from_axis_angle(n, theta));
    worst = std::max(worst, std::abs(aa.theta - theta));
    worst = std::max(worst, max_abs_diff(aa.axis.vec(), n.vec()));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("periodicity: V(-n, 4pi - theta) = V(n, theta)") {
  verify::Rng rng(36);
  const Tolerance tol;
  for (int i = 0; i < 2000; ++i) {
    const UnitVec3 n = verify::random_unit_vec(rng);
    const double theta = rng.uniform(0.0, kFourPi);
    CHECK(max_abs_diff(su2::from_axis_angle(-n, kFourPi - theta),
                       su2::from_axis_angle(n, theta)) <= tol.eps_eq);
  }
}

TEST_CASE("rotation gates: half-turn forms and axis-angle consistency") {
  CHECK(max_abs_diff(su2::rotation_gate(PauliAxis::X, kPi), su2::reflection(UnitVec3(1, 0, 0))) <=
        1e-15);
  CHECK(max_abs_diff(su2::rotation_gate(PauliAxis::Y, kPi), su2::reflection(UnitVec3(0, 1, 0))) <=
        1e-15);
  CHECK(max_abs_diff(su2::rotation_gate(PauliAxis::Z, 0.0), Su2Op::identity()) == 0.0);
  CHECK_THROWS_AS(su2::rotation_gate(PauliAxis::I, 1.0), Error);

  // R_X(pi) = i.X and R_Y(pi) = i.Y entrywise.
  const Su2Op rx = su2::rotation_gate(PauliAxis::X, kPi);
  CHECK(max_abs_diff(su2::to_matrix(rx), Complex(0, 1) * pauli_matrix(PauliAxis::X)) <= 1e-15);
  const Su2Op ry = su2::rotation_gate(PauliAxis::Y, kPi);
  CHECK(max_abs_diff(su2::to_matrix(ry), Complex(0, 1) * pauli_matrix(PauliAxis::Y)) <= 1e-15);

  verify::Rng rng(37);
  const Tolerance tol;
  const UnitVec3 axes[3] = {UnitVec3(1, 0, 0), UnitVec3(0, 1, 0), UnitVec3(0, 0, 1)};
  const PauliAxis tags[3] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
  for (int i = 0; i < 500; ++i) {
    const double theta = rng.uniform(-kFourPi, kFourPi);
    for (int k = 0; k < 3; ++k)
      CHECK(max_abs_diff(su2::rotation_gate(tags[k], theta),
                         su2::from_axis_angle(axes[k], theta)) <= tol.eps_eq);
  }
}

TEST_CASE("reflection: explicit i.(n dot sigma) and square = -Id") {
  const Su2Op ix = su2::reflection(UnitVec3(1, 0, 0));
  CHECK(ix.a() == Complex(0, 0));
  CHECK(ix.b() == Complex(0, 1));
  const Su2Op iz = su2::reflection(UnitVec3(0, 0, 1));
  CHECK(iz.a() == Complex(0, 1));
  CHECK(iz.b() == Complex(0, 0));

  verify::Rng rng(38);
  for (int i = 0; i < 500; ++i) {
    const UnitVec3 n = verify::random_unit_vec(rng);
    const Su2Op r = su2::reflection(n);
    CHECK(max_abs_diff(su2::to_matrix(r), Complex(0, 1) * dot_sigma(n.vec())) == 0.0);
    CHECK(max_abs_diff(r, su2::from_axis_angle(n, kPi)) <= 1e-15);
    CHECK(max_abs_diff(su2::mul(r, r), -Su2Op::identity()) <= 1e-15);
  }
}

TEST_CASE("exp_series: fixed points and closed-form agreement") {
  verify::Rng rng(39);
  const UnitVec3 z(0, 0, 1);
  CHECK(max_abs_diff(su2::exp_series(z, 0.0, 7), Mat2C::identity()) == 0.0);
  CHECK(max_abs_diff(su2::exp_series(z, kPi, 30),
                     Complex(0, 1) * pauli_matrix(PauliAxis::Z)) <= 1e-12);

  // exp(i pi/4 X) = (Id + i X)/sqrt(2).
  const Mat2C expected = Complex(1.0 / std::sqrt(2.0), 0) *
                         (Mat2C::identity() + Complex(0, 1) * pauli_matrix(PauliAxis::X));
  CHECK(max_abs_diff(su2::exp_series(UnitVec3(1, 0, 0), kPi / 2, 30), expected) <= 1e-12);

  CHECK_THROWS_AS(su2::exp_series(z, 1.0, 0), Error);
  // terms = 1 keeps only the identity term.
  CHECK(max_abs_diff(su2::exp_series(z, 1.0, 1), Mat2C::identity()) == 0.0);

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const UnitVec3 n = verify::random_unit_vec(rng);
    const double theta = rng.uniform(-kFourPi, kFourPi);
    worst = std::max(worst, max_abs_diff(su2::exp_series(n, theta, 30),
                                         su2::to_matrix(su2::from_axis_angle(n, theta))));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("3-sphere norm stays bounded over a long multiplication chain") {
  verify::Rng rng(40);
  const Tolerance tol;
  const Su2Op step = verify::random_su2(rng);
  Su2Op acc = Su2Op::identity();
  for (int i = 0; i < 1000000; ++i) acc = su2::mul(acc, step);
  CHECK(std::abs(std::norm(acc.a()) + std::norm(acc.b()) - 1.0) <= tol.eps_unit);
}

TEST_CASE("determinant of constructed operators is 1") {
  verify::Rng rng(41);
  const Tolerance tol;
  for (int i = 0; i < 2000; ++i) {
    const Su2Op v = verify::random_su2(rng);
    CHECK(max_abs_diff(su2::to_matrix(v).det(), Complex(1, 0)) <= tol.eps_eq);
  }
}
