#include <numbers>

#include "doctest.h"
#include "rotkit/json_io.hpp"
#include "rotkit/verify.hpp"

using namespace rotkit;
using jsonio::ojson;

TEST_CASE("scalar and vector encodings") {
  CHECK(jsonio::encode(Complex(1.5, -2.0)).dump() == R"({"re":1.5,"im":-2.0})");
  CHECK(jsonio::encode(Vec3(1, 2, 3)).dump() == "[1.0,2.0,3.0]");

  const ojson q = jsonio::encode(QubitState(Complex(1, 0), Complex(0, 0)));
  CHECK(q.contains("c0"));
  CHECK(q.contains("c1"));
  CHECK(q["c0"]["re"] == 1.0);
}

TEST_CASE("su2 and axis-angle encodings round-trip bitwise") {
  verify::Rng rng(91);
  for (int i = 0; i < 200; ++i) {
    const Su2Op v = verify::random_su2(rng);
    const Su2Op back = jsonio::decode_su2(ojson::parse(jsonio::encode(v).dump()));
    CHECK(back.a() == v.a());
    CHECK(back.b() == v.b());
  }

  const AxisAngle aa = su2::to_axis_angle(-Su2Op::identity());
  const ojson j = jsonio::encode(aa);
  CHECK(j["is_minus_identity"] == true);
  const AxisAngle back = jsonio::decode_axis_angle(j);
  CHECK(back.theta == aa.theta);
  CHECK(back.is_minus_identity);
}

TEST_CASE("so3 encoding round-trips and validates") {
  verify::Rng rng(92);
  for (int i = 0; i < 100; ++i) {
    const So3Rot r = cover::project(verify::random_su2(rng));
    const So3Rot back = jsonio::decode_so3(ojson::parse(jsonio::encode(r).dump()));
    CHECK(max_abs_diff(back, r) == 0.0);
  }
  CHECK_THROWS_AS(jsonio::decode_so3(ojson::parse("[[2,0,0],[0,2,0],[0,0,2]]")), NotRotation);
  CHECK_THROWS_AS(jsonio::decode_so3(ojson::parse("[[1,0],[0,1]]")), jsonio::EncodingError);
}

TEST_CASE("operator detection by shape") {
  const auto su2_in = jsonio::decode_operator(ojson::parse(R"({"a":{"re":1,"im":0},"b":{"re":0,"im":0}})"));
  CHECK(su2_in.su2.has_value());
  CHECK_FALSE(su2_in.so3.has_value());

  const auto so3_in = jsonio::decode_operator(ojson::parse("[[1,0,0],[0,1,0],[0,0,1]]"));
  CHECK(so3_in.so3.has_value());

  const auto aa_in = jsonio::decode_operator(ojson::parse(R"({"axis":[0,0,1],"theta":1.0})"));
  CHECK(aa_in.axis_angle.has_value());

  CHECK_THROWS_AS(jsonio::decode_operator(ojson::parse(R"({"foo":1})")), jsonio::EncodingError);

  // All three views agree on the rotation they denote.
  const Tolerance tol;
  const So3Rot expected = so3::from_axis_angle(UnitVec3(0, 0, 1), 1.0);
  CHECK(max_abs_diff(jsonio::as_so3(aa_in, tol), expected) <= 1e-12);
  CHECK(max_abs_diff(cover::project(jsonio::as_su2(aa_in, tol)), expected) <= 1e-12);
}

TEST_CASE("domain validation still applies to decoded values") {
  CHECK_THROWS_AS(jsonio::decode_su2(ojson::parse(R"({"a":{"re":2,"im":0},"b":{"re":0,"im":0}})")),
                  NotSpecialUnitary);
  CHECK_THROWS_AS(
      jsonio::decode_axis_angle(ojson::parse(R"({"axis":[3,0,0],"theta":0.5})")), NonUnitAxis);
}
