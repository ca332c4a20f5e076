#ifndef ROTKIT_JSON_IO_HPP
#define ROTKIT_JSON_IO_HPP

#include <optional>

#include "json.hpp"
#include "rotkit/bloch.hpp"
#include "rotkit/cover.hpp"
#include "rotkit/script.hpp"
#include "rotkit/so3.hpp"
#include "rotkit/su2.hpp"
#include "rotkit/verify.hpp"

namespace rotkit::jsonio {

using ojson = nlohmann::ordered_json;

/// A syntactically well-formed JSON value that is not one of the operator
/// encodings (treated as an input error, like malformed JSON).
struct EncodingError : Error {
  using Error::Error;
};

ojson encode(const Complex& c);
ojson encode(const Vec3& v);
ojson encode(const UnitVec3& v);
ojson encode(const Mat2C& m);
ojson encode(const Mat3R& m);
ojson encode(const Su2Op& v);
ojson encode(const So3Rot& r);
ojson encode(const AxisAngle& aa);
ojson encode(const QubitState& psi);
ojson encode(const CheckReport& r);
ojson encode(const verify::SuiteResult& s);
ojson encode(const script::EvalResult& r, std::string_view script_text);

Complex decode_complex(const ojson& j);
Vec3 decode_vec3(const ojson& j);
Su2Op decode_su2(const ojson& j, const Tolerance& tol = {});
So3Rot decode_so3(const ojson& j, const Tolerance& tol = {});
AxisAngle decode_axis_angle(const ojson& j, const Tolerance& tol = {});

/// Any of the operator encodings: {"a","b"} is SU(2), a 3x3 array is SO(3),
/// {"axis","theta"} is axis-angle. Exactly one member is populated.
struct DecodedOperator {
  std::optional<Su2Op> su2;
  std::optional<So3Rot> so3;
  std::optional<AxisAngle> axis_angle;
};

DecodedOperator decode_operator(const ojson& j, const Tolerance& tol = {});

/// The SU(2) view of any operator input (SO(3) input takes the principal
/// lift; axis-angle input is constructed).
Su2Op as_su2(const DecodedOperator& op, const Tolerance& tol = {});

/// The SO(3) view of any operator input.
So3Rot as_so3(const DecodedOperator& op, const Tolerance& tol = {});

}  // namespace rotkit::jsonio

#endif
