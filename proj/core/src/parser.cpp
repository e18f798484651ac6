#include "nijenhuis2d/parser.hpp"

#include <cctype>
#include <string>

#include "nijenhuis2d/errors.hpp"

namespace nijenhuis2d {

namespace {

enum class Tok { Number, X, Y, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  SourceSpan span;
  std::string_view text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }
  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == src_.size()) {
      current_ = {Tok::End, {start, start}, {}};
      return;
    }
    const char ch = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      current_ = {Tok::Number, {start, pos_}, src_.substr(start, pos_ - start)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view word = src_.substr(start, pos_ - start);
      if (word == "x") {
        current_ = {Tok::X, {start, pos_}, word};
      } else if (word == "y") {
        current_ = {Tok::Y, {start, pos_}, word};
      } else {
        throw SyntaxError("variable x or y", {start, pos_});
      }
      return;
    }
    ++pos_;
    Tok kind = Tok::End;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw SyntaxError("operand or operator", {start, pos_});
    }
    current_ = {kind, {start, pos_}, src_.substr(start, 1)};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_;
};

struct PolyOps {
  using Value = BivariatePolynomial;
  static Value number(const Rational& r) { return Value(r); }
  static Value x() { return Value::x(); }
  static Value y() { return Value::y(); }
  static Value pow(const Value& v, unsigned e) { return v.pow(e); }
  static Value divide(const Value& a, const Value& b, SourceSpan span) {
    if (b.is_zero()) throw ZeroDenominator(span);
    DivisionOutcome d = exact_div(a, b);
    if (!d.divisible) throw NonPolynomialDivision(span);
    return d.quotient;
  }
};

struct RationalOps {
  using Value = RationalFunction2;
  static Value number(const Rational& r) { return Value(r); }
  static Value x() { return Value(BivariatePolynomial::x()); }
  static Value y() { return Value(BivariatePolynomial::y()); }
  static Value pow(const Value& v, unsigned e) { return v.pow(e); }
  static Value divide(const Value& a, const Value& b, SourceSpan span) {
    if (b.is_zero()) throw ZeroDenominator(span);
    return a / b;
  }
};

template <typename Ops>
class Parser {
 public:
  using Value = typename Ops::Value;
  struct Node {
    Value value;
    SourceSpan span;
  };

  explicit Parser(std::string_view src) : lex_(src) {}

  Value parse_all() {
    Node n = expr();
    if (lex_.peek().kind != Tok::End) {
      throw SyntaxError(lex_.peek().kind == Tok::RParen ? "end of input (unbalanced ')')"
                                                         : "operator or end of input",
                        lex_.peek().span);
    }
    return std::move(n.value);
  }

 private:
  Node expr() {
    Node lhs = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const bool minus = lex_.take().kind == Tok::Minus;
      Node rhs = term();
      lhs.value = minus ? lhs.value - rhs.value : lhs.value + rhs.value;
      lhs.span.end = rhs.span.end;
    }
    return lhs;
  }

  Node term() {
    Node lhs = unary();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      const bool divide = lex_.take().kind == Tok::Slash;
      Node rhs = unary();
      const SourceSpan span{lhs.span.begin, rhs.span.end};
      lhs.value = divide ? Ops::divide(lhs.value, rhs.value, span) : lhs.value * rhs.value;
      lhs.span = span;
    }
    return lhs;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p, SourceSpan span) : parser(p) {
      if (++parser.depth_ > kMaxDepth) throw SyntaxError("nesting depth at most 256", span);
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };
  static constexpr int kMaxDepth = 256;

  Node unary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Minus || t.kind == Tok::Plus) {
      const Token op = lex_.take();
      DepthGuard guard(*this, op.span);
      Node inner = unary();
      if (op.kind == Tok::Minus) inner.value = -inner.value;
      inner.span.begin = op.span.begin;
      return inner;
    }
    return power();
  }

  Node power() {
    Node base = atom();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      const Token e = lex_.peek();
      if (e.kind != Tok::Number) throw SyntaxError("nonnegative integer exponent", e.span);
      lex_.take();
      if (e.text.size() > 6 || std::stoul(std::string(e.text)) > kMaxExponent) {
        throw SyntaxError("exponent at most " + std::to_string(kMaxExponent), e.span);
      }
      const unsigned exponent = static_cast<unsigned>(std::stoul(std::string(e.text)));
      base.value = Ops::pow(base.value, exponent);
      base.span.end = e.span.end;
    }
    return base;
  }

  Node atom() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Number:
        lex_.take();
        return {Ops::number(Rational::parse(t.text)), t.span};
      case Tok::X:
        lex_.take();
        return {Ops::x(), t.span};
      case Tok::Y:
        lex_.take();
        return {Ops::y(), t.span};
      case Tok::LParen: {
        lex_.take();
        DepthGuard guard(*this, t.span);
        Node inner = expr();
        if (lex_.peek().kind != Tok::RParen) throw SyntaxError("')'", lex_.peek().span);
        inner.span = {t.span.begin, lex_.take().span.end};
        return inner;
      }
      default:
        throw SyntaxError("operand", t.span);
    }
  }

  Lexer lex_;
  int depth_ = 0;
};

}  // namespace

BivariatePolynomial parse_poly(std::string_view text) { return Parser<PolyOps>(text).parse_all(); }

RationalFunction2 parse_rational(std::string_view text) {
  return Parser<RationalOps>(text).parse_all();
}

OperatorField2 parse_operator(const std::array<std::string_view, 4>& entries) {
  std::array<RationalFunction2, 4> parsed;
  for (int i = 0; i < 4; ++i) {
    try {
      parsed[i] = parse_rational(entries[i]);
    } catch (const InputError& e) {
      throw EntryInputError(i, e);
    }
  }
  return {parsed[0], parsed[1], parsed[2], parsed[3]};
}

}  // namespace nijenhuis2d
