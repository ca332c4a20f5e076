#ifndef ROTKIT_SCRIPT_HPP
#define ROTKIT_SCRIPT_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rotkit/cover.hpp"
#include "rotkit/pauli.hpp"
#include "rotkit/so3.hpp"
#include "rotkit/su2.hpp"

namespace rotkit::script {

enum class TokenKind {
  Name,
  Number,
  Pi,
  Star,
  Slash,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Minus,
  End
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;  // byte offset into the source text
};

/// Longest-match lexer. Names are RX, RY, RZ, R, REF, ID (case-insensitive);
/// "pi" lexes as its own token; numbers are decimal digits with an optional
/// fractional part. Throws LexError with the byte offset otherwise.
std::vector<Token> tokenize(std::string_view text);

/// Angle literal: a coefficient, optionally times pi.
struct Angle {
  double coef;
  bool times_pi;

  double radians() const;
  bool operator==(const Angle&) const = default;
};

struct RotExpr;
using ExprPtr = std::unique_ptr<RotExpr>;

struct GateNode {  // RX/RY/RZ(angle)
  PauliAxis axis;
  Angle angle;
};
struct AxisRotNode {  // R([x,y,z], angle); vector normalized at evaluation
  double x, y, z;
  Angle angle;
};
struct ReflectNode {  // REF([x,y,z])
  double x, y, z;
};
struct IdentityNode {};
struct ProductNode {  // left * right, the matrix product (right acts first)
  ExprPtr lhs;
  ExprPtr rhs;
};

struct RotExpr {
  std::variant<GateNode, AxisRotNode, ReflectNode, IdentityNode, ProductNode> node;
};

bool equal(const RotExpr& a, const RotExpr& b);

/// Grammar:
///   expr    := term (STAR term)*                 (STAR left-associative)
///   term    := gate | axisrot | reflect | ID | LPAREN expr RPAREN
///   gate    := (RX|RY|RZ) LPAREN angle RPAREN
///   axisrot := R LPAREN vec COMMA angle RPAREN
///   reflect := REF LPAREN vec RPAREN
///   vec     := LBRACKET num COMMA num COMMA num RBRACKET
///   num     := [MINUS] NUMBER
///   angle   := [MINUS] (NUMBER [STAR PI] | PI [SLASH NUMBER]
///              | NUMBER SLASH NUMBER [STAR PI])
ExprPtr parse(const std::vector<Token>& tokens);

/// Canonical text form; re-parsing it yields an identical tree.
std::string to_text(const RotExpr& expr);

/// Composite operator record for an evaluated script.
struct EvalResult {
  Su2Op su2;
  So3Rot so3;            // project(su2)
  AxisAngle axis_angle;  // su2::to_axis_angle(su2)
  UnitVec3 bloch_image;  // so3 applied to the north pole (0,0,1)
};

EvalResult eval(const RotExpr& expr, const Tolerance& tol = {});

/// tokenize + parse + eval.
EvalResult eval_script(std::string_view text, const Tolerance& tol = {});

}  // namespace rotkit::script

#endif
