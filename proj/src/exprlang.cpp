#include "frost/exprlang.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>
#include <utility>

namespace frost {

namespace detail {

enum class ExprOp {
  number,
  variable,
  add,
  sub,
  mul,
  div,
  pow,
  neg,
  fn_exp,
  fn_ln,
  fn_abs,
  fn_sin,
  fn_cos,
  fn_sqrt,
};

struct ExprNode {
  ExprOp op;
  double number = 0.0;
  bool depends_on_x = false;
  std::shared_ptr<const ExprNode> a;  // left operand, or the sole operand
  std::shared_ptr<const ExprNode> b;  // right operand of a binary node
};

}  // namespace detail

namespace {

using detail::ExprNode;
using detail::ExprOp;
using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_number(double v) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::number;
  n->number = v;
  return n;
}

NodePtr make_variable() {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::variable;
  n->depends_on_x = true;
  return n;
}

NodePtr make_unary(ExprOp op, NodePtr a) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->depends_on_x = a->depends_on_x;
  n->a = std::move(a);
  return n;
}

NodePtr make_binary(ExprOp op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->depends_on_x = a->depends_on_x || b->depends_on_x;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

struct Token {
  enum class Kind {
    end,
    number,
    ident,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
  };
  Kind kind = Kind::end;
  std::size_t pos = 0;
  double number = 0.0;
  std::string ident;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { scan(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    scan();
    return t;
  }

 private:
  void scan() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    current_ = Token{};
    current_.pos = pos_;
    if (pos_ >= text_.size()) return;

    char c = text_[pos_];
    switch (c) {
      case '+': current_.kind = Token::Kind::plus; ++pos_; return;
      case '-': current_.kind = Token::Kind::minus; ++pos_; return;
      case '*': current_.kind = Token::Kind::star; ++pos_; return;
      case '/': current_.kind = Token::Kind::slash; ++pos_; return;
      case '^': current_.kind = Token::Kind::caret; ++pos_; return;
      case '(': current_.kind = Token::Kind::lparen; ++pos_; return;
      case ')': current_.kind = Token::Kind::rparen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* first = text_.data() + pos_;
      const char* last = text_.data() + text_.size();
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec == std::errc::result_out_of_range)
        throw ParseError("number out of range", pos_);
      if (ec != std::errc() || ptr == first)
        throw ParseError("malformed number", pos_);
      current_.kind = Token::Kind::number;
      current_.number = value;
      pos_ += static_cast<std::size_t>(ptr - first);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      current_.kind = Token::Kind::ident;
      current_.ident = std::string(text_.substr(start, pos_ - start));
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (lex_.peek().kind != Token::Kind::end)
      throw ParseError("unexpected trailing input", lex_.peek().pos);
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      Token::Kind k = lex_.peek().kind;
      if (k != Token::Kind::plus && k != Token::Kind::minus) return lhs;
      lex_.take();
      NodePtr rhs = term();
      lhs = make_binary(k == Token::Kind::plus ? ExprOp::add : ExprOp::sub,
                        std::move(lhs), std::move(rhs));
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      Token::Kind k = lex_.peek().kind;
      if (k != Token::Kind::star && k != Token::Kind::slash) return lhs;
      lex_.take();
      NodePtr rhs = unary();
      lhs = make_binary(k == Token::Kind::star ? ExprOp::mul : ExprOp::div,
                        std::move(lhs), std::move(rhs));
    }
  }

  NodePtr unary() {
    if (lex_.peek().kind == Token::Kind::minus) {
      lex_.take();
      return make_unary(ExprOp::neg, unary());
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (lex_.peek().kind == Token::Kind::caret) {
      lex_.take();
      return make_binary(ExprOp::pow, std::move(base), unary());
    }
    return base;
  }

  NodePtr primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::number:
        return make_number(t.number);
      case Token::Kind::ident: {
        if (t.ident == "x") return make_variable();
        ExprOp op;
        if (t.ident == "exp") op = ExprOp::fn_exp;
        else if (t.ident == "ln") op = ExprOp::fn_ln;
        else if (t.ident == "abs") op = ExprOp::fn_abs;
        else if (t.ident == "sin") op = ExprOp::fn_sin;
        else if (t.ident == "cos") op = ExprOp::fn_cos;
        else if (t.ident == "sqrt") op = ExprOp::fn_sqrt;
        else
          throw ParseError("unknown identifier '" + t.ident + "'", t.pos);
        expect(Token::Kind::lparen, "expected '(' after function name");
        NodePtr arg = expr();
        expect(Token::Kind::rparen, "expected ')'");
        return make_unary(op, std::move(arg));
      }
      case Token::Kind::lparen: {
        NodePtr e = expr();
        expect(Token::Kind::rparen, "expected ')'");
        return e;
      }
      default:
        throw ParseError("expected a number, 'x', a function call, or '('",
                         t.pos);
    }
  }

  void expect(Token::Kind kind, const char* message) {
    if (lex_.peek().kind != kind) throw ParseError(message, lex_.peek().pos);
    lex_.take();
  }

  Lexer lex_;
};

double eval_node(const ExprNode& n, double x) {
  switch (n.op) {
    case ExprOp::number: return n.number;
    case ExprOp::variable: return x;
    case ExprOp::add: return eval_node(*n.a, x) + eval_node(*n.b, x);
    case ExprOp::sub: return eval_node(*n.a, x) - eval_node(*n.b, x);
    case ExprOp::mul: return eval_node(*n.a, x) * eval_node(*n.b, x);
    case ExprOp::div: {
      double d = eval_node(*n.b, x);
      if (d == 0.0) throw EvalError("division by zero");
      return eval_node(*n.a, x) / d;
    }
    case ExprOp::pow: {
      double base = eval_node(*n.a, x);
      double e = eval_node(*n.b, x);
      if (base < 0.0 && e != std::rint(e))
        throw EvalError("fractional power of a negative base");
      if (base == 0.0 && e < 0.0)
        throw EvalError("zero raised to a negative power");
      return std::pow(base, e);
    }
    case ExprOp::neg: return -eval_node(*n.a, x);
    case ExprOp::fn_exp: return std::exp(eval_node(*n.a, x));
    case ExprOp::fn_ln: {
      double v = eval_node(*n.a, x);
      if (!(v > 0.0)) throw EvalError("ln of a non-positive value");
      return std::log(v);
    }
    case ExprOp::fn_abs: return std::fabs(eval_node(*n.a, x));
    case ExprOp::fn_sin: return std::sin(eval_node(*n.a, x));
    case ExprOp::fn_cos: return std::cos(eval_node(*n.a, x));
    case ExprOp::fn_sqrt: {
      double v = eval_node(*n.a, x);
      if (v < 0.0) throw EvalError("sqrt of a negative value");
      return std::sqrt(v);
    }
  }
  throw EvalError("corrupt expression tree");
}

DualValue dual_node(const ExprNode& n, double x) {
  switch (n.op) {
    case ExprOp::number: return {n.number, 0.0};
    case ExprOp::variable: return {x, 1.0};
    case ExprOp::add: {
      DualValue a = dual_node(*n.a, x), b = dual_node(*n.b, x);
      return {a.primal + b.primal, a.tangent + b.tangent};
    }
    case ExprOp::sub: {
      DualValue a = dual_node(*n.a, x), b = dual_node(*n.b, x);
      return {a.primal - b.primal, a.tangent - b.tangent};
    }
    case ExprOp::mul: {
      DualValue a = dual_node(*n.a, x), b = dual_node(*n.b, x);
      return {a.primal * b.primal, a.primal * b.tangent + a.tangent * b.primal};
    }
    case ExprOp::div: {
      DualValue a = dual_node(*n.a, x), b = dual_node(*n.b, x);
      if (b.primal == 0.0) throw EvalError("division by zero");
      return {a.primal / b.primal,
              (a.tangent * b.primal - a.primal * b.tangent) /
                  (b.primal * b.primal)};
    }
    case ExprOp::pow: {
      DualValue base = dual_node(*n.a, x);
      if (!n.b->depends_on_x) {
        // Power rule with a constant exponent. This keeps negative bases
        // legal for integer exponents, which exp(e*ln(base)) would not.
        double c = eval_node(*n.b, x);
        if (base.primal < 0.0 && c != std::rint(c))
          throw EvalError("fractional power of a negative base");
        if (base.primal == 0.0 && c < 0.0)
          throw EvalError("zero raised to a negative power");
        double value = std::pow(base.primal, c);
        double deriv = 0.0;
        if (c != 0.0 && base.tangent != 0.0)
          deriv = c * std::pow(base.primal, c - 1.0) * base.tangent;
        if (!std::isfinite(deriv))
          throw EvalError("power is not differentiable at this point");
        return {value, deriv};
      }
      DualValue e = dual_node(*n.b, x);
      if (!(base.primal > 0.0))
        throw EvalError("variable exponent requires a positive base");
      double lb = std::log(base.primal);
      double value = std::exp(e.primal * lb);
      double deriv =
          value * (e.tangent * lb + e.primal * base.tangent / base.primal);
      return {value, deriv};
    }
    case ExprOp::neg: {
      DualValue a = dual_node(*n.a, x);
      return {-a.primal, -a.tangent};
    }
    case ExprOp::fn_exp: {
      DualValue a = dual_node(*n.a, x);
      double v = std::exp(a.primal);
      return {v, v * a.tangent};
    }
    case ExprOp::fn_ln: {
      DualValue a = dual_node(*n.a, x);
      if (!(a.primal > 0.0)) throw EvalError("ln of a non-positive value");
      return {std::log(a.primal), a.tangent / a.primal};
    }
    case ExprOp::fn_abs: {
      DualValue a = dual_node(*n.a, x);
      if (a.primal == 0.0) throw EvalError("abs is not differentiable at 0");
      return a.primal > 0.0 ? a : DualValue{-a.primal, -a.tangent};
    }
    case ExprOp::fn_sin: {
      DualValue a = dual_node(*n.a, x);
      return {std::sin(a.primal), std::cos(a.primal) * a.tangent};
    }
    case ExprOp::fn_cos: {
      DualValue a = dual_node(*n.a, x);
      return {std::cos(a.primal), -std::sin(a.primal) * a.tangent};
    }
    case ExprOp::fn_sqrt: {
      DualValue a = dual_node(*n.a, x);
      if (a.primal < 0.0) throw EvalError("sqrt of a negative value");
      if (a.primal == 0.0) throw EvalError("sqrt is not differentiable at 0");
      double v = std::sqrt(a.primal);
      return {v, a.tangent / (2.0 * v)};
    }
  }
  throw EvalError("corrupt expression tree");
}

int precedence(ExprOp op) {
  switch (op) {
    case ExprOp::add:
    case ExprOp::sub: return 1;
    case ExprOp::mul:
    case ExprOp::div: return 2;
    case ExprOp::neg: return 3;
    case ExprOp::pow: return 4;
    default: return 5;
  }
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

void print_node(const ExprNode& n, std::string& out);

void print_child(const ExprNode& child, std::string& out, bool parens) {
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

// Parentheses are inserted exactly where reparsing would otherwise change
// the tree: lower-precedence children, right operands of left-associative
// operators at equal precedence, and both sensitive sides of '^'.
void print_node(const ExprNode& n, std::string& out) {
  int prec = precedence(n.op);
  switch (n.op) {
    case ExprOp::number: out += format_double(n.number); return;
    case ExprOp::variable: out += 'x'; return;
    case ExprOp::add:
    case ExprOp::sub:
    case ExprOp::mul:
    case ExprOp::div: {
      const char* sym = n.op == ExprOp::add   ? " + "
                        : n.op == ExprOp::sub ? " - "
                        : n.op == ExprOp::mul ? " * "
                                              : " / ";
      print_child(*n.a, out, precedence(n.a->op) < prec);
      out += sym;
      print_child(*n.b, out, precedence(n.b->op) <= prec);
      return;
    }
    case ExprOp::pow:
      print_child(*n.a, out, precedence(n.a->op) <= prec);
      out += '^';
      print_child(*n.b, out, precedence(n.b->op) < prec);
      return;
    case ExprOp::neg:
      out += '-';
      print_child(*n.a, out, precedence(n.a->op) < prec);
      return;
    case ExprOp::fn_exp:
    case ExprOp::fn_ln:
    case ExprOp::fn_abs:
    case ExprOp::fn_sin:
    case ExprOp::fn_cos:
    case ExprOp::fn_sqrt: {
      const char* name = n.op == ExprOp::fn_exp   ? "exp"
                         : n.op == ExprOp::fn_ln  ? "ln"
                         : n.op == ExprOp::fn_abs ? "abs"
                         : n.op == ExprOp::fn_sin ? "sin"
                         : n.op == ExprOp::fn_cos ? "cos"
                                                  : "sqrt";
      out += name;
      out += '(';
      print_node(*n.a, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at position " + std::to_string(position) +
                         ")"),
      position_(position) {}

Expression::Expression(std::shared_ptr<const detail::ExprNode> root)
    : root_(std::move(root)) {}

Expression Expression::parse(std::string_view text) {
  return Expression(Parser(text).parse());
}

double Expression::eval(double x) const { return eval_node(*root_, x); }

DualValue Expression::eval_dual(double x) const {
  return dual_node(*root_, x);
}

std::string Expression::pretty() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

bool Expression::depends_on_x() const { return root_->depends_on_x; }

}  // namespace frost
