#ifndef ROTKIT_AXIS_ANGLE_HPP
#define ROTKIT_AXIS_ANGLE_HPP

#include "rotkit/linalg.hpp"

namespace rotkit {

/// Unit axis plus angle in radians. The canonical theta range depends on the
/// producing operation: su2::to_axis_angle reports [0, 2pi) (with -Id flagged
/// explicitly, theta = 2pi), so3::to_axis_angle reports [0, pi].
struct AxisAngle {
  UnitVec3 axis;
  double theta;
  bool is_minus_identity = false;
};

}  // namespace rotkit

#endif
