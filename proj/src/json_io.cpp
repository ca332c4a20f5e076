#include "rotkit/json_io.hpp"

namespace rotkit::jsonio {

ojson encode(const Complex& c) { return ojson{{"re", c.real()}, {"im", c.imag()}}; }

ojson encode(const Vec3& v) { return ojson::array({v.x, v.y, v.z}); }

ojson encode(const UnitVec3& v) { return encode(v.vec()); }

ojson encode(const Mat2C& m) {
  return ojson::array({ojson::array({encode(m.m[0][0]), encode(m.m[0][1])}),
                       ojson::array({encode(m.m[1][0]), encode(m.m[1][1])})});
}

ojson encode(const Mat3R& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < 3; ++i) rows.push_back(ojson::array({m.m[i][0], m.m[i][1], m.m[i][2]}));
  return rows;
}

ojson encode(const Su2Op& v) { return ojson{{"a", encode(v.a())}, {"b", encode(v.b())}}; }

ojson encode(const So3Rot& r) { return encode(r.mat()); }

ojson encode(const AxisAngle& aa) {
  return ojson{
      {"axis", encode(aa.axis)}, {"theta", aa.theta}, {"is_minus_identity", aa.is_minus_identity}};
}

ojson encode(const QubitState& psi) {
  return ojson{{"c0", encode(psi.c0())}, {"c1", encode(psi.c1())}};
}

ojson encode(const CheckReport& r) {
  return ojson{{"samples", r.samples},
               {"max_residual", r.max_residual},
               {"failures", r.failures},
               {"seed", r.seed}};
}

ojson encode(const verify::SuiteResult& s) {
  ojson reports = ojson::array();
  for (const auto& nr : s.reports) {
    reports.push_back(ojson{{"name", nr.name},
                            {"samples", nr.report.samples},
                            {"max_residual", nr.report.max_residual},
                            {"failures", nr.report.failures},
                            {"seed", nr.report.seed}});
  }
  return ojson{{"pass", s.pass}, {"reports", std::move(reports)}, {"elapsed_s", s.elapsed_s}};
}

ojson encode(const script::EvalResult& r, std::string_view script_text) {
  return ojson{{"script", std::string(script_text)},
               {"su2", encode(r.su2)},
               {"so3", encode(r.so3)},
               {"axis_angle", encode(r.axis_angle)},
               {"bloch_image", encode(r.bloch_image)}};
}

Complex decode_complex(const ojson& j) {
  return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

Vec3 decode_vec3(const ojson& j) {
  if (!j.is_array() || j.size() != 3) throw EncodingError("expected a 3-element array");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Su2Op decode_su2(const ojson& j, const Tolerance& tol) {
  return Su2Op(decode_complex(j.at("a")), decode_complex(j.at("b")), tol);
}

So3Rot decode_so3(const ojson& j, const Tolerance& tol) {
  if (!j.is_array() || j.size() != 3) throw EncodingError("expected a 3x3 array");
  Mat3R m;
  for (int i = 0; i < 3; ++i) {
    const ojson& row = j[i];
    if (!row.is_array() || row.size() != 3) throw EncodingError("expected a 3x3 array");
    for (int k = 0; k < 3; ++k) m.m[i][k] = row[k].get<double>();
  }
  return So3Rot(m, tol);
}

AxisAngle decode_axis_angle(const ojson& j, const Tolerance& tol) {
  const UnitVec3 axis(decode_vec3(j.at("axis")), tol);
  const double theta = j.at("theta").get<double>();
  if (!std::isfinite(theta)) throw NonFinite("axis-angle: theta must be finite");
  bool minus = false;
  if (j.contains("is_minus_identity")) minus = j.at("is_minus_identity").get<bool>();
  return AxisAngle{axis, theta, minus};
}

DecodedOperator decode_operator(const ojson& j, const Tolerance& tol) {
  DecodedOperator op;
  if (j.is_array()) {
    op.so3 = decode_so3(j, tol);
    return op;
  }
  if (j.is_object() && j.contains("a") && j.contains("b")) {
    op.su2 = decode_su2(j, tol);
    return op;
  }
  if (j.is_object() && j.contains("axis") && j.contains("theta")) {
    op.axis_angle = decode_axis_angle(j, tol);
    return op;
  }
  throw EncodingError(
      "not an operator encoding (expected {\"a\",\"b\"}, a 3x3 array, or {\"axis\",\"theta\"})");
}

Su2Op as_su2(const DecodedOperator& op, const Tolerance& tol) {
  if (op.su2) return *op.su2;
  if (op.axis_angle) return su2::from_axis_angle(op.axis_angle->axis, op.axis_angle->theta);
  return cover::lift(*op.so3, tol).first;
}

So3Rot as_so3(const DecodedOperator& op, const Tolerance& tol) {
  if (op.so3) return *op.so3;
  if (op.axis_angle) return so3::from_axis_angle(op.axis_angle->axis, op.axis_angle->theta);
  return cover::project(*op.su2, tol);
}

}  // namespace rotkit::jsonio
