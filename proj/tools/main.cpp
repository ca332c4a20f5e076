#include <cstdio>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotkit/bloch.hpp"
#include "rotkit/cover.hpp"
#include "rotkit/json_io.hpp"
#include "rotkit/script.hpp"
#include "rotkit/so3.hpp"
#include "rotkit/su2.hpp"
#include "rotkit/verify.hpp"

namespace {

using namespace rotkit;
using jsonio::ojson;

// Exit code contract: 0 success, 2 input/parse error, 3 domain validation
// error, 4 identity-suite failure.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCheckFailed = 4;

struct Options {
  std::string format = "text";
  double tol = 1e-12;
  std::uint64_t seed = 42;
  std::int64_t samples = 10000;

  Tolerance tolerance() const {
    Tolerance t;
    t.eps_eq = tol;
    t.eps_unit = std::max(t.eps_unit, tol);
    t.validate();
    return t;
  }
};

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt6(const Complex& c) {
  return fmt6(c.real()) + (c.imag() < 0 ? " - " : " + ") + fmt6(std::abs(c.imag())) + "i";
}

std::string fmt6(const Vec3& v) {
  return "[" + fmt6(v.x) + ", " + fmt6(v.y) + ", " + fmt6(v.z) + "]";
}

std::string read_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

ojson parse_stdin_json() { return ojson::parse(read_stdin()); }

void emit(const Options& opt, const ojson& json_doc, const std::string& text_doc) {
  if (opt.format == "json")
    std::cout << json_doc.dump() << "\n";
  else
    std::cout << text_doc;
}

std::string su2_text(const Su2Op& v) {
  return "a: " + fmt6(v.a()) + "\nb: " + fmt6(v.b()) + "\n";
}

std::string so3_text(const So3Rot& r) {
  std::string s;
  for (int i = 0; i < 3; ++i)
    s += "[ " + fmt6(r.mat().m[i][0]) + "  " + fmt6(r.mat().m[i][1]) + "  " +
         fmt6(r.mat().m[i][2]) + " ]\n";
  return s;
}

std::string axis_angle_text(const AxisAngle& aa) {
  std::string s = "axis: " + fmt6(aa.axis.vec()) + "\ntheta: " + fmt6(aa.theta) + "\n";
  if (aa.is_minus_identity) s += "minus_identity: true\n";
  return s;
}

std::string state_text(const QubitState& psi) {
  return "(" + fmt6(psi.c0()) + ", " + fmt6(psi.c1()) + ")";
}

UnitVec3 axis_from_flags(const std::vector<double>& axis, const Tolerance& tol) {
  return UnitVec3::normalized(Vec3(axis.at(0), axis.at(1), axis.at(2)), tol);
}

int cmd_convert(const Options& opt, const std::vector<double>& axis, double theta, bool has_axis,
                const std::string& target) {
  const Tolerance tol = opt.tolerance();
  jsonio::DecodedOperator op;
  if (has_axis) {
    op.axis_angle = AxisAngle{axis_from_flags(axis, tol), theta, false};
  } else {
    op = jsonio::decode_operator(parse_stdin_json(), tol);
  }

  if (target == "su2") {
    const Su2Op v = jsonio::as_su2(op, tol);
    emit(opt, jsonio::encode(v), su2_text(v));
  } else if (target == "so3") {
    const So3Rot r = jsonio::as_so3(op, tol);
    emit(opt, jsonio::encode(r), so3_text(r));
  } else if (target == "axisangle") {
    // SO(3) inputs canonicalize to theta in [0, pi]; everything else goes
    // through the SU(2) extraction with theta in [0, 2pi).
    const AxisAngle aa = op.so3 ? so3::to_axis_angle(*op.so3, tol)
                                : su2::to_axis_angle(jsonio::as_su2(op, tol), tol);
    emit(opt, jsonio::encode(aa), axis_angle_text(aa));
  } else {  // bloch
    const So3Rot r = jsonio::as_so3(op, tol);
    const AxisAngle aa = op.so3 ? so3::to_axis_angle(*op.so3, tol)
                                : su2::to_axis_angle(jsonio::as_su2(op, tol), tol);
    const UnitVec3 image(r.apply(Vec3(0, 0, 1)), tol);
    const QubitState up = eig_up(aa.axis, tol);
    ojson j{{"axis", jsonio::encode(aa.axis)},
            {"bloch_image", jsonio::encode(image)},
            {"eig_up", jsonio::encode(up)}};
    emit(opt, j,
         "axis: " + fmt6(aa.axis.vec()) + "\nbloch_image: " + fmt6(image.vec()) +
             "\neig_up: " + state_text(up) + "\n");
  }
  return kExitOk;
}

std::string operator_record_text(const Su2Op& v, const So3Rot& r, const AxisAngle& aa,
                                 const UnitVec3& image) {
  return "su2:\n" + su2_text(v) + "so3:\n" + so3_text(r) + axis_angle_text(aa) +
         "bloch_image: " + fmt6(image.vec()) + "\n";
}

ojson operator_record_json(const Su2Op& v, const So3Rot& r, const AxisAngle& aa,
                           const UnitVec3& image) {
  return ojson{{"su2", jsonio::encode(v)},
               {"so3", jsonio::encode(r)},
               {"axis_angle", jsonio::encode(aa)},
               {"bloch_image", jsonio::encode(image)}};
}

int cmd_compose(const Options& opt) {
  const Tolerance tol = opt.tolerance();
  const ojson inputs = parse_stdin_json();
  if (!inputs.is_array() || inputs.empty())
    throw jsonio::EncodingError("compose expects a non-empty JSON array of operators");
  Su2Op acc = jsonio::as_su2(jsonio::decode_operator(inputs[0], tol), tol);
  for (std::size_t i = 1; i < inputs.size(); ++i)
    acc = su2::mul(acc, jsonio::as_su2(jsonio::decode_operator(inputs[i], tol), tol), tol);
  const So3Rot r = cover::project(acc, tol);
  const AxisAngle aa = su2::to_axis_angle(acc, tol);
  const UnitVec3 image(r.apply(Vec3(0, 0, 1)), tol);
  emit(opt, operator_record_json(acc, r, aa, image), operator_record_text(acc, r, aa, image));
  return kExitOk;
}

int cmd_decompose(const Options& opt, const std::vector<double>& axis, double theta,
                  bool has_axis) {
  const Tolerance tol = opt.tolerance();
  Su2Op v = has_axis ? su2::from_axis_angle(axis_from_flags(axis, tol), theta)
                     : jsonio::as_su2(jsonio::decode_operator(parse_stdin_json(), tol), tol);
  const MirrorDecomposition d = cover::decompose_to_reflections(v, tol);
  const Su2Op recomposed =
      su2::mul(su2::reflection(d.mirrors.second), su2::reflection(d.mirrors.first), tol);
  const double residual = std::min(max_abs_diff(recomposed, v), max_abs_diff(recomposed, -v));
  ojson j{{"first", jsonio::encode(d.mirrors.first)},
          {"second", jsonio::encode(d.mirrors.second)},
          {"sign", d.sign},
          {"residual", residual}};
  emit(opt, j,
       "first:  " + fmt6(d.mirrors.first.vec()) + "\nsecond: " + fmt6(d.mirrors.second.vec()) +
           "\nsign: " + std::to_string(d.sign) + "\nresidual: " + fmt6(residual) + "\n");
  return kExitOk;
}

int cmd_eigvec(const Options& opt, const std::vector<double>& axis) {
  const Tolerance tol = opt.tolerance();
  const UnitVec3 n = axis_from_flags(axis, tol);
  const QubitState up = eig_up(n, tol);
  const QubitState down = eig_down(n, tol);
  ojson j{{"axis", jsonio::encode(n)}, {"up", jsonio::encode(up)}, {"down", jsonio::encode(down)}};
  emit(opt, j,
       "axis: " + fmt6(n.vec()) + "\nup:   " + state_text(up) + "\ndown: " + state_text(down) +
           "\n");
  return kExitOk;
}

int cmd_prob(const Options& opt, const std::vector<double>& k, const std::vector<double>& n) {
  const Tolerance tol = opt.tolerance();
  const double p = overlap_prob(axis_from_flags(k, tol), axis_from_flags(n, tol), tol);
  emit(opt, ojson{{"prob", p}}, fmt6(p) + "\n");
  return kExitOk;
}

int cmd_eval(const Options& opt, const std::string& text) {
  const Tolerance tol = opt.tolerance();
  const script::EvalResult r = script::eval_script(text, tol);
  emit(opt, jsonio::encode(r, text),
       "script: " + text + "\n" + operator_record_text(r.su2, r.so3, r.axis_angle, r.bloch_image));
  return kExitOk;
}

int cmd_check(const Options& opt) {
  const verify::SuiteResult result = verify::run_identity_suite(opt.samples, opt.seed, opt.tol);
  std::string text;
  for (const auto& nr : result.reports) {
    text += std::string(nr.report.failures == 0 ? "PASS" : "FAIL") + "  " + nr.name +
            "  max_residual=" + fmt6(nr.report.max_residual) +
            "  failures=" + std::to_string(nr.report.failures) + "/" +
            std::to_string(nr.report.samples) + "\n";
  }
  text += std::string(result.pass ? "PASS" : "FAIL") + "  (" +
          std::to_string(result.reports.size()) + " checks, " + fmt6(result.elapsed_s) + " s)\n";
  emit(opt, jsonio::encode(result), text);
  return result.pass ? kExitOk : kExitCheckFailed;
}

void print_script_error_context(const std::string& text, std::size_t pos) {
  std::string echo = text;
  for (char& c : echo)
    if (c == '\n' || c == '\t' || c == '\r') c = ' ';
  std::cerr << "  " << echo << "\n  " << std::string(std::min(pos, echo.size()), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2)/SO(3) rotation algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--tol", opt.tol, "Identity-check tolerance")
      ->check(CLI::Range(1e-300, 0.999))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", opt.samples, "Randomized-check sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<double> axis_flag;
  double theta_flag = 0.0;
  std::string to_target;
  std::vector<double> k_flag;
  std::vector<double> n_flag;
  std::string script_text;

  CLI::App* convert = app.add_subcommand(
      "convert", "Convert between su2/so3/axis-angle/Bloch encodings (stdin JSON or flags)");
  CLI::Option* conv_axis =
      convert->add_option("--axis", axis_flag, "Axis x,y,z")->delimiter(',')->expected(3);
  convert->add_option("--theta", theta_flag, "Angle in radians")->needs(conv_axis);
  convert->add_option("--to", to_target, "Target encoding")
      ->required()
      ->check(CLI::IsMember({"su2", "so3", "axisangle", "bloch"}));

  CLI::App* compose =
      app.add_subcommand("compose", "Multiply a JSON array of operators from stdin");

  CLI::App* decompose = app.add_subcommand(
      "decompose", "Split an operator into two mirror reflections (stdin JSON or flags)");
  CLI::Option* dec_axis =
      decompose->add_option("--axis", axis_flag, "Axis x,y,z")->delimiter(',')->expected(3);
  decompose->add_option("--theta", theta_flag, "Angle in radians")->needs(dec_axis);

  CLI::App* eigvec = app.add_subcommand("eigvec", "Eigenstates of the axis operator");
  eigvec->add_option("--axis", axis_flag, "Axis x,y,z")->delimiter(',')->expected(3)->required();

  CLI::App* prob = app.add_subcommand("prob", "Measurement overlap probability of two axes");
  prob->add_option("--k", k_flag, "First axis x,y,z")->delimiter(',')->expected(3)->required();
  prob->add_option("--n", n_flag, "Second axis x,y,z")->delimiter(',')->expected(3)->required();

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a rotation script");
  eval->add_option("script", script_text, "Rotation expression")->required();

  CLI::App* check = app.add_subcommand("check", "Run the randomized identity suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (convert->parsed())
      return cmd_convert(opt, axis_flag, theta_flag, !axis_flag.empty(), to_target);
    if (compose->parsed()) return cmd_compose(opt);
    if (decompose->parsed()) return cmd_decompose(opt, axis_flag, theta_flag, !axis_flag.empty());
    if (eigvec->parsed()) return cmd_eigvec(opt, axis_flag);
    if (prob->parsed()) return cmd_prob(opt, k_flag, n_flag);
    if (eval->parsed()) return cmd_eval(opt, script_text);
    if (check->parsed()) return cmd_check(opt);
  } catch (const LexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    print_script_error_context(script_text, e.pos);
    return kExitInput;
  } catch (const rotkit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    print_script_error_context(script_text, e.pos);
    return kExitInput;
  } catch (const jsonio::EncodingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return kExitInput;
  } catch (const rotkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
