#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/formula.hpp"

// Concrete syntax:
//   x0 x1 ...   variables            ~    negation        []  necessity
//   &           conjunction          ->   implication (right associative)
//   <->  ==     biconditional / strict equivalence (loosest, right associative)
//   T  F        verum / falsum
// ~ and [] bind tightest, then &, then ->, then <-> and ==.

namespace strictmodal {

namespace {

constexpr unsigned kMaxVarIndex = 1u << 24;

enum class Tok { Var, Neg, Box, And, Impl, Iff, Equiv, True, False, LParen, RParen, End };

struct Token {
  Tok kind;
  unsigned var = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t{Tok::End, 0, line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      switch (c) {
        case '~': t.kind = Tok::Neg; advance(); break;
        case '&': t.kind = Tok::And; advance(); break;
        case '(': t.kind = Tok::LParen; advance(); break;
        case ')': t.kind = Tok::RParen; advance(); break;
        case 'T': t.kind = Tok::True; advance(); break;
        case 'F': t.kind = Tok::False; advance(); break;
        case '[':
          advance();
          expect(']', "expected ']' after '['");
          t.kind = Tok::Box;
          break;
        case '-':
          advance();
          expect('>', "expected '>' after '-'");
          t.kind = Tok::Impl;
          break;
        case '<':
          advance();
          expect('-', "expected '->' after '<'");
          expect('>', "expected '>' after '<-'");
          t.kind = Tok::Iff;
          break;
        case '=':
          advance();
          expect('=', "expected '==' (single '=' is not an operator)");
          t.kind = Tok::Equiv;
          break;
        case 'x': {
          advance();
          if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected digits after 'x'", t.line, t.column);
          std::uint64_t value = 0;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > kMaxVarIndex) fail("variable index overflow", t.line, t.column);
            advance();
          }
          t.kind = Tok::Var;
          t.var = static_cast<unsigned>(value);
          break;
        }
        default:
          fail(std::string("unexpected character '") + c + "'", line_, column_);
      }
      out.push_back(t);
    }
  }

private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void advance() {
    ++pos_;
    ++column_;
  }

  void expect(char c, const std::string& msg) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(msg, line_, column_);
    advance();
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t line, std::size_t column) {
    throw ParseError(msg, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_equiv_level();
    if (peek().kind != Tok::End) fail("unexpected trailing input");
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }

  Token take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, peek().line, peek().column);
  }

  Formula parse_equiv_level() {
    Formula lhs = parse_impl_level();
    if (peek().kind == Tok::Iff) {
      take();
      return Formula::iff(std::move(lhs), parse_equiv_level());
    }
    if (peek().kind == Tok::Equiv) {
      take();
      return Formula::equiv(std::move(lhs), parse_equiv_level());
    }
    return lhs;
  }

  Formula parse_impl_level() {
    Formula lhs = parse_conj_level();
    if (peek().kind == Tok::Impl) {
      take();
      return Formula::implies(std::move(lhs), parse_impl_level());
    }
    return lhs;
  }

  Formula parse_conj_level() {
    Formula f = parse_unary();
    while (peek().kind == Tok::And) {
      take();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Neg:
        take();
        return Formula::neg(parse_unary());
      case Tok::Box:
        take();
        return Formula::box(parse_unary());
      case Tok::Var:
        return Formula::var(take().var);
      case Tok::True:
        take();
        return Formula::truth();
      case Tok::False:
        take();
        return Formula::falsity();
      case Tok::LParen: {
        take();
        Formula f = parse_equiv_level();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return f;
      }
      default:
        fail("expected a formula");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void print_core(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out += 'x';
      out += std::to_string(f.var_index());
      break;
    case Formula::Kind::Neg:
      out += '~';
      print_core(f.child(), out);
      break;
    case Formula::Kind::Box:
      out += "[]";
      print_core(f.child(), out);
      break;
    case Formula::Kind::Impl:
      out += '(';
      print_core(f.lhs(), out);
      out += " -> ";
      print_core(f.rhs(), out);
      out += ')';
      break;
  }
}

void print_sugared(const Formula& f, std::string& out) {
  if (f.is_truth()) {
    out += 'T';
    return;
  }
  if (f.is_falsity()) {
    out += 'F';
    return;
  }
  if (auto eq = f.as_equiv()) {
    out += '(';
    print_sugared(eq->first, out);
    out += " == ";
    print_sugared(eq->second, out);
    out += ')';
    return;
  }
  if (auto iff = f.as_iff()) {
    out += '(';
    print_sugared(iff->first, out);
    out += " <-> ";
    print_sugared(iff->second, out);
    out += ')';
    return;
  }
  if (auto cj = f.as_conj()) {
    out += '(';
    print_sugared(cj->first, out);
    out += " & ";
    print_sugared(cj->second, out);
    out += ')';
    return;
  }
  switch (f.kind()) {
    case Formula::Kind::Var:
      out += 'x';
      out += std::to_string(f.var_index());
      break;
    case Formula::Kind::Neg:
      out += '~';
      print_sugared(f.child(), out);
      break;
    case Formula::Kind::Box:
      out += "[]";
      print_sugared(f.child(), out);
      break;
    case Formula::Kind::Impl:
      out += '(';
      print_sugared(f.lhs(), out);
      out += " -> ";
      print_sugared(f.rhs(), out);
      out += ')';
      break;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

std::string print_formula(const Formula& f, bool resugar) {
  std::string out;
  if (resugar)
    print_sugared(f, out);
  else
    print_core(f, out);
  return out;
}

}  // namespace strictmodal
