#include "transcalc/parser.hpp"

#include <cctype>
#include <map>

#include "transcalc/error.hpp"

namespace transcalc {

namespace {

// Known functions and their arities; bare identifiers fall through to
// session bindings.
const std::map<std::string, int>& function_arities() {
  static const std::map<std::string, int> table = {
      {"log", 1},       {"exp", 1},      {"d", 1},       {"int", 1},
      {"compose", 2},   {"inverse", 1},  {"lt", 1},      {"sign", 1},
      {"cmp", 2},       {"lambda", 1},   {"omega", 1},   {"omega_map", 1},
      {"theta", 1},     {"schwarzian", 1}, {"newton", 1}, {"vP", 2},
      {"solve1", 2},    {"in_I", 1},     {"in_Lambda", 1}, {"osc", 1},
      {"gamma", 1},     {"root", 2},     {"asy", 2},     {"split", 1},
      {"st", 1},        {"smallint", 1}, {"dpeval", 2},  {"conj", 2},
      {"equalize", 2},  {"opmul", 2},
  };
  return table;
}

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
  int pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
      ++i_;
    int pos = static_cast<int>(i_);
    if (i_ >= src_.size()) {
      tok_ = {Token::End, "", pos};
      return;
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[j])))
        ++j;
      tok_ = {Token::Number, src_.substr(i_, j - i_), pos};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) ||
              src_[j] == '_'))
        ++j;
      tok_ = {Token::Ident, src_.substr(i_, j - i_), pos};
      i_ = j;
      return;
    }
    if (std::string("+-*/^(),=").find(c) != std::string::npos) {
      tok_ = {Token::Op, std::string(1, c), pos};
      ++i_;
      return;
    }
    fail(Errc::SyntaxError, std::string("unexpected character '") + c + "'",
         pos);
  }

  const std::string& src_;
  std::size_t i_ = 0;
  Token tok_{Token::End, "", 0};
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  ParsedLine parse_line_all() {
    ParsedLine out;
    // Lookahead for "ident = ...": an '=' can appear nowhere else.
    if (lex_.peek().kind == Token::Ident) {
      Lexer probe = lex_;
      Token id = probe.take();
      if (probe.peek().kind == Token::Op && probe.peek().text == "=") {
        lex_.take();
        lex_.take();
        out.assign_name = id.text;
      }
    }
    out.expr = parse_expr();
    expect_end();
    return out;
  }

  AstPtr parse_expr_all() {
    AstPtr e = parse_expr();
    expect_end();
    return e;
  }

 private:
  void expect_end() {
    if (lex_.peek().kind != Token::End)
      fail(Errc::SyntaxError, "unexpected trailing input", lex_.peek().pos);
  }

  bool at_op(const char* s) const {
    return lex_.peek().kind == Token::Op && lex_.peek().text == s;
  }

  void expect_op(const char* s) {
    if (!at_op(s))
      fail(Errc::SyntaxError, std::string("expected '") + s + "'",
           lex_.peek().pos);
    lex_.take();
  }

  AstPtr node(AstKind k, int pos) {
    auto n = std::make_unique<Ast>();
    n->kind = k;
    n->pos = pos;
    return n;
  }

  AstPtr parse_expr() {
    AstPtr left = parse_term();
    while (at_op("+") || at_op("-")) {
      Token op = lex_.take();
      AstPtr n = node(op.text == "+" ? AstKind::Add : AstKind::Sub, op.pos);
      n->args.push_back(std::move(left));
      n->args.push_back(parse_term());
      left = std::move(n);
    }
    return left;
  }

  AstPtr parse_term() {
    AstPtr left = parse_unary();
    while (at_op("*") || at_op("/")) {
      Token op = lex_.take();
      AstPtr n = node(op.text == "*" ? AstKind::Mul : AstKind::Div, op.pos);
      n->args.push_back(std::move(left));
      n->args.push_back(parse_unary());
      left = std::move(n);
    }
    return left;
  }

  AstPtr parse_unary() {
    if (at_op("-")) {
      Token op = lex_.take();
      AstPtr n = node(AstKind::Neg, op.pos);
      n->args.push_back(parse_unary());
      return n;
    }
    return parse_power();
  }

  AstPtr parse_power() {
    AstPtr base = parse_atom();
    if (at_op("^")) {
      Token op = lex_.take();
      AstPtr n = node(AstKind::Pow, op.pos);
      n->number = parse_rational_literal("exponent must be a rational literal");
      n->args.push_back(std::move(base));
      return n;
    }
    return base;
  }

  // integer ('/' positive-integer)?, with an optional sign when allowed
  // by the caller (exponents).
  Rat parse_rational_literal(const char* what) {
    bool negative = false;
    if (at_op("-")) {
      lex_.take();
      negative = true;
    }
    if (lex_.peek().kind != Token::Number)
      fail(Errc::SyntaxError, what, lex_.peek().pos);
    Token num = lex_.take();
    Rat r = rat_from_string(num.text);
    if (at_op("/")) {
      Lexer probe = lex_;
      probe.take();
      if (probe.peek().kind == Token::Number) {
        lex_.take();
        Token den = lex_.take();
        Rat d = rat_from_string(den.text);
        if (d <= 0)
          fail(Errc::SyntaxError, "denominator must be a positive integer",
               den.pos);
        r /= d;
      }
    }
    return negative ? Rat(-r) : r;
  }

  AstPtr parse_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Number) {
      AstPtr n = node(AstKind::Number, t.pos);
      n->number = parse_rational_literal("expected a number");
      return n;
    }
    if (t.kind == Token::Ident) {
      Token id = lex_.take();
      if (at_op("(")) {
        auto arity = function_arities().find(id.text);
        if (arity == function_arities().end())
          fail(Errc::UnknownFunction, "unknown function '" + id.text + "'",
               id.pos);
        lex_.take();
        AstPtr n = node(AstKind::Call, id.pos);
        n->name = id.text;
        if (!at_op(")")) {
          n->args.push_back(parse_expr());
          while (at_op(",")) {
            lex_.take();
            n->args.push_back(parse_expr());
          }
        }
        expect_op(")");
        if (static_cast<int>(n->args.size()) != arity->second)
          fail(Errc::ArityError,
               id.text + " expects " + std::to_string(arity->second) +
                   " argument(s), got " + std::to_string(n->args.size()),
               id.pos);
        return n;
      }
      AstPtr n = node(AstKind::Ident, id.pos);
      n->name = id.text;
      return n;
    }
    if (at_op("(")) {
      lex_.take();
      AstPtr e = parse_expr();
      expect_op(")");
      return e;
    }
    fail(Errc::SyntaxError, "expected an expression", t.pos);
  }

  Lexer lex_;
};

}  // namespace

ParsedLine parse_line(const std::string& src) {
  Parser p(src);
  return p.parse_line_all();
}

AstPtr parse_expression(const std::string& src) {
  Parser p(src);
  return p.parse_expr_all();
}

}  // namespace transcalc
