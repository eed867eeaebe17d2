#include "bochnerlab/parser.hpp"

#include <algorithm>
#include <cctype>

#include "bochnerlab/errors.hpp"

namespace bochnerlab {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::size_t pos;
  Rational value;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) return {Token::Kind::End, start, {}, {}};
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = read_digits();
      // A '/' immediately followed by digits is a rational literal.
      if (i_ < s_.size() && s_[i_] == '/' && i_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
        ++i_;
        digits += "/" + read_digits();
      }
      return {Token::Kind::Number, start, parse_rational(digits), digits};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        name += s_[i_++];
      return {Token::Kind::Ident, start, {}, name};
    }
    ++i_;
    switch (c) {
      case '+': return {Token::Kind::Plus, start, {}, "+"};
      case '-': return {Token::Kind::Minus, start, {}, "-"};
      case '*': return {Token::Kind::Star, start, {}, "*"};
      case '^': return {Token::Kind::Caret, start, {}, "^"};
      case '(': return {Token::Kind::LParen, start, {}, "("};
      case ')': return {Token::Kind::RParen, start, {}, ")"};
      default: throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  std::string read_digits() {
    std::string d;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      d += s_[i_++];
    return d;
  }
  const std::string& s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars)
      : lex_(s), vars_(vars) {
    advance();
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
      auto kind = tok_.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      advance();
      ExprPtr r = parse_term();
      e = node(kind, e, r);
    }
    return e;
  }

  void expect_end() const {
    if (tok_.kind != Token::Kind::End)
      throw SyntaxError(tok_.pos, "trailing input '" + tok_.text + "'");
  }

 private:
  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (tok_.kind == Token::Kind::Star) {
      advance();
      e = node(Expr::Kind::Mul, e, parse_factor());
    }
    return e;
  }

  ExprPtr parse_factor() {
    if (tok_.kind == Token::Kind::Minus) {
      std::size_t pos = tok_.pos;
      advance();
      ExprPtr inner = parse_factor();
      (void)pos;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Neg;
      e->lhs = inner;
      return e;
    }
    ExprPtr base = parse_base();
    if (tok_.kind == Token::Kind::Caret) {
      advance();
      if (tok_.kind != Token::Kind::Number || tok_.value.get_den() != 1 ||
          tok_.value < 0)
        throw SyntaxError(tok_.pos, "exponent must be a nonnegative integer");
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Pow;
      e->lhs = base;
      e->exponent = unsigned(tok_.value.get_num().get_ui());
      advance();
      return e;
    }
    return base;
  }

  ExprPtr parse_base() {
    switch (tok_.kind) {
      case Token::Kind::Number: {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Literal;
        e->value = tok_.value;
        advance();
        return e;
      }
      case Token::Kind::Ident: {
        if (std::find(vars_.begin(), vars_.end(), tok_.text) == vars_.end())
          throw UnknownVariable(tok_.text);
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Variable;
        e->name = tok_.text;
        advance();
        return e;
      }
      case Token::Kind::LParen: {
        advance();
        ExprPtr e = parse_expr();
        if (tok_.kind != Token::Kind::RParen)
          throw SyntaxError(tok_.pos, "expected ')'");
        advance();
        return e;
      }
      default:
        throw SyntaxError(tok_.pos, "expected a value");
    }
  }

  ExprPtr node(Expr::Kind k, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  void advance() { tok_ = lex_.next(); }

  Lexer lex_;
  const std::vector<std::string>& vars_;
  Token tok_;
};

}  // namespace

ExprPtr parse(const std::string& text, const std::vector<std::string>& allowed_vars) {
  Parser p(text, allowed_vars);
  ExprPtr e = p.parse_expr();
  p.expect_end();
  return e;
}

MPoly to_poly(const ExprPtr& e, const ContextPtr& ctx) {
  switch (e->kind) {
    case Expr::Kind::Literal: return MPoly::constant(e->value, ctx);
    case Expr::Kind::Variable: return MPoly::variable(e->name, ctx);
    case Expr::Kind::Add: return to_poly(e->lhs, ctx) + to_poly(e->rhs, ctx);
    case Expr::Kind::Sub: return to_poly(e->lhs, ctx) - to_poly(e->rhs, ctx);
    case Expr::Kind::Mul: return to_poly(e->lhs, ctx) * to_poly(e->rhs, ctx);
    case Expr::Kind::Pow: return pow(to_poly(e->lhs, ctx), e->exponent);
    case Expr::Kind::Neg: return -to_poly(e->lhs, ctx);
  }
  throw Error("unreachable");
}

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return to_poly(parse(text, vars), make_context(vars));
}

}  // namespace bochnerlab
