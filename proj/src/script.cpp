#include "rotkit/script.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

namespace rotkit::script {

namespace {

constexpr std::size_t kMaxInput = 64 * 1024;

std::string upper(std::string_view s) {
  std::string r(s);
  for (char& c : r) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return r;
}

// Shortest round-trippable decimal form.
std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  if (text.size() > kMaxInput) throw LexError(kMaxInput, "input exceeds 64 KiB");
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
      const std::string word = upper(text.substr(start, i - start));
      if (word == "PI") {
        tokens.push_back({TokenKind::Pi, word, start});
      } else if (word == "RX" || word == "RY" || word == "RZ" || word == "R" || word == "REF" ||
                 word == "ID") {
        tokens.push_back({TokenKind::Name, word, start});
      } else {
        throw LexError(start, "unknown name '" + std::string(text.substr(start, i - start)) + "'");
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i + 1 < text.size() && text[i] == '.' &&
          std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      }
      tokens.push_back({TokenKind::Number, std::string(text.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case ',': kind = TokenKind::Comma; break;
      case '-': kind = TokenKind::Minus; break;
      default:
        throw LexError(i, "unexpected character '" + std::string(1, c) + "'");
    }
    tokens.push_back({kind, std::string(1, c), i});
    ++i;
  }
  tokens.push_back({TokenKind::End, "", text.size()});
  return tokens;
}

double Angle::radians() const { return times_pi ? coef * std::numbers::pi : coef; }

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  ExprPtr run() {
    ExprPtr e = expr();
    expect(TokenKind::End, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError(peek().pos, what);
    return tokens_[pos_++];
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (accept(TokenKind::Star)) {
      ExprPtr right = term();
      auto prod = std::make_unique<RotExpr>();
      prod->node = ProductNode{std::move(left), std::move(right)};
      left = std::move(prod);
    }
    return left;
  }

  ExprPtr term() {
    if (accept(TokenKind::LParen)) {
      ExprPtr e = expr();
      expect(TokenKind::RParen, "')'");
      return e;
    }
    const Token& t = expect(TokenKind::Name, "a gate name, REF, ID, or '('");
    auto node = std::make_unique<RotExpr>();
    if (t.text == "ID") {
      node->node = IdentityNode{};
      return node;
    }
    if (t.text == "REF") {
      expect(TokenKind::LParen, "'('");
      const auto [x, y, z] = vec();
      expect(TokenKind::RParen, "')'");
      node->node = ReflectNode{x, y, z};
      return node;
    }
    if (t.text == "R") {
      expect(TokenKind::LParen, "'('");
      const auto [x, y, z] = vec();
      expect(TokenKind::Comma, "','");
      const Angle a = angle();
      expect(TokenKind::RParen, "')'");
      node->node = AxisRotNode{x, y, z, a};
      return node;
    }
    // RX / RY / RZ
    const PauliAxis axis = t.text == "RX"   ? PauliAxis::X
                           : t.text == "RY" ? PauliAxis::Y
                                            : PauliAxis::Z;
    expect(TokenKind::LParen, "'('");
    const Angle a = angle();
    expect(TokenKind::RParen, "')'");
    node->node = GateNode{axis, a};
    return node;
  }

  struct VecLiteral {
    double x, y, z;
  };

  VecLiteral vec() {
    expect(TokenKind::LBracket, "'['");
    const double x = number_component();
    expect(TokenKind::Comma, "','");
    const double y = number_component();
    expect(TokenKind::Comma, "','");
    const double z = number_component();
    expect(TokenKind::RBracket, "']'");
    return {x, y, z};
  }

  double number_component() {
    const bool neg = accept(TokenKind::Minus);
    const Token& t = expect(TokenKind::Number, "a number");
    return neg ? -to_double(t) : to_double(t);
  }

  // angle := [MINUS] (NUMBER [STAR PI] | PI [SLASH NUMBER]
  //          | NUMBER SLASH NUMBER [STAR PI])
  Angle angle() {
    const bool neg = accept(TokenKind::Minus);
    double coef;
    bool times_pi;
    if (accept(TokenKind::Pi)) {
      coef = 1.0;
      times_pi = true;
      if (accept(TokenKind::Slash)) coef = 1.0 / to_double(expect(TokenKind::Number, "a number"));
    } else {
      const Token& num = expect(TokenKind::Number, "an angle (number or pi)");
      coef = to_double(num);
      times_pi = false;
      if (accept(TokenKind::Slash)) coef /= to_double(expect(TokenKind::Number, "a number"));
      if (accept(TokenKind::Star)) {
        expect(TokenKind::Pi, "'pi'");
        times_pi = true;
      }
    }
    return Angle{neg ? -coef : coef, times_pi};
  }

  double to_double(const Token& t) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    // Out-of-range literals become infinity here and NonFinite at evaluation.
    if (ec == std::errc::result_out_of_range)
      return std::numeric_limits<double>::infinity();
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      throw ParseError(t.pos, "a valid number");
    return v;
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

struct EqualVisitor {
  const RotExpr& b;

  bool operator()(const GateNode& g) const {
    const auto* other = std::get_if<GateNode>(&b.node);
    return other && other->axis == g.axis && other->angle == g.angle;
  }
  bool operator()(const AxisRotNode& r) const {
    const auto* other = std::get_if<AxisRotNode>(&b.node);
    return other && other->x == r.x && other->y == r.y && other->z == r.z &&
           other->angle == r.angle;
  }
  bool operator()(const ReflectNode& r) const {
    const auto* other = std::get_if<ReflectNode>(&b.node);
    return other && other->x == r.x && other->y == r.y && other->z == r.z;
  }
  bool operator()(const IdentityNode&) const {
    return std::holds_alternative<IdentityNode>(b.node);
  }
  bool operator()(const ProductNode& p) const {
    const auto* other = std::get_if<ProductNode>(&b.node);
    return other && equal(*p.lhs, *other->lhs) && equal(*p.rhs, *other->rhs);
  }
};

std::string angle_text(const Angle& a) {
  if (!a.times_pi) return format_double(a.coef);
  const std::string sign = a.coef < 0.0 ? "-" : "";
  const double mag = std::abs(a.coef);
  if (mag == 1.0) return sign + "pi";
  const double inv = 1.0 / mag;
  if (inv == std::floor(inv) && inv <= 1e6) return sign + "pi/" + format_double(inv);
  return format_double(a.coef) + "*pi";
}

std::string vec_text(double x, double y, double z) {
  return "[" + format_double(x) + "," + format_double(y) + "," + format_double(z) + "]";
}

struct PrintVisitor {
  bool parenthesize_products;

  std::string operator()(const GateNode& g) const {
    const char* name = g.axis == PauliAxis::X ? "RX" : g.axis == PauliAxis::Y ? "RY" : "RZ";
    return std::string(name) + "(" + angle_text(g.angle) + ")";
  }
  std::string operator()(const AxisRotNode& r) const {
    return "R(" + vec_text(r.x, r.y, r.z) + ", " + angle_text(r.angle) + ")";
  }
  std::string operator()(const ReflectNode& r) const {
    return "REF(" + vec_text(r.x, r.y, r.z) + ")";
  }
  std::string operator()(const IdentityNode&) const { return "ID"; }
  std::string operator()(const ProductNode& p) const {
    // '*' is left-associative, so only a right child that is itself a
    // product needs parentheses to round-trip the tree shape.
    const std::string lhs = std::visit(PrintVisitor{false}, p.lhs->node);
    std::string rhs = std::visit(PrintVisitor{true}, p.rhs->node);
    const std::string text = lhs + " * " + rhs;
    return parenthesize_products ? "(" + text + ")" : text;
  }
};

struct EvalVisitor {
  const Tolerance& tol;

  Su2Op operator()(const GateNode& g) const {
    return su2::rotation_gate(g.axis, finite_radians(g.angle));
  }
  Su2Op operator()(const AxisRotNode& r) const {
    return su2::from_axis_angle(UnitVec3::normalized(Vec3(r.x, r.y, r.z), tol),
                                finite_radians(r.angle));
  }
  Su2Op operator()(const ReflectNode& r) const {
    return su2::reflection(UnitVec3::normalized(Vec3(r.x, r.y, r.z), tol));
  }
  Su2Op operator()(const IdentityNode&) const { return Su2Op::identity(); }
  Su2Op operator()(const ProductNode& p) const {
    return su2::mul(std::visit(*this, p.lhs->node), std::visit(*this, p.rhs->node), tol);
  }

  double finite_radians(const Angle& a) const {
    const double r = a.radians();
    if (!std::isfinite(r)) throw NonFinite("angle literal overflows");
    return r;
  }
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

bool equal(const RotExpr& a, const RotExpr& b) { return std::visit(EqualVisitor{b}, a.node); }

std::string to_text(const RotExpr& expr) { return std::visit(PrintVisitor{false}, expr.node); }

EvalResult eval(const RotExpr& expr, const Tolerance& tol) {
  const Su2Op op = std::visit(EvalVisitor{tol}, expr.node);
  const So3Rot rot = cover::project(op, tol);
  return EvalResult{op, rot, su2::to_axis_angle(op, tol),
                    UnitVec3(rot.apply(Vec3(0, 0, 1)), tol)};
}

EvalResult eval_script(std::string_view text, const Tolerance& tol) {
  return eval(*parse(tokenize(text)), tol);
}

}  // namespace rotkit::script
