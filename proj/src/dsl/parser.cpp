// Recursive-descent parser for Lagrangian expressions.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' factor)?
//   base   := number | var | fn '(' expr ')' | '(' expr ')' | '-' base
//
// '^' is right-associative through the recursion in factor. The Unicode
// minus sign U+2212 is accepted wherever '-' is.

#include <cctype>
#include <cstdlib>
#include <string>

#include "core/errors.hpp"
#include "dsl/expr.hpp"

namespace hahnvar::dsl {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::string text;
  double number = 0.0;
};

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case Tok::End: return "end of input";
    case Tok::Number: return "number '" + tok.text + "'";
    case Tok::Ident: return "identifier '" + tok.text + "'";
    default: return "'" + tok.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    Token tok;
    tok.pos = pos_;
    if (pos_ >= src_.size()) return tok;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))))
      return number(tok);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        ++end;
      tok.kind = Tok::Ident;
      tok.text = std::string(src_.substr(pos_, end - pos_));
      pos_ = end;
      return tok;
    }
    if (src_.substr(pos_, 3) == "\xE2\x88\x92") {
      tok.kind = Tok::Minus;
      tok.text = "-";
      pos_ += 3;
      return tok;
    }
    tok.text = std::string(1, c);
    switch (c) {
      case '+': tok.kind = Tok::Plus; break;
      case '-': tok.kind = Tok::Minus; break;
      case '*': tok.kind = Tok::Star; break;
      case '/': tok.kind = Tok::Slash; break;
      case '^': tok.kind = Tok::Caret; break;
      case '(': tok.kind = Tok::LParen; break;
      case ')': tok.kind = Tok::RParen; break;
      default:
        throw SyntaxError(pos_, {"number", "identifier", "'('", "'-'"},
                          "unexpected character '" + tok.text + "'");
    }
    ++pos_;
    return tok;
  }

 private:
  Token number(Token& tok) {
    std::size_t end = pos_;
    auto digits = [&] {
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
    };
    digits();
    if (end < src_.size() && src_[end] == '.') {
      ++end;
      digits();
    }
    if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      std::size_t exp = end + 1;
      if (exp < src_.size() && (src_[exp] == '+' || src_[exp] == '-')) ++exp;
      if (exp < src_.size() && std::isdigit(static_cast<unsigned char>(src_[exp]))) {
        end = exp;
        digits();
      } else {
        throw SyntaxError(exp, {"exponent digits"}, "malformed number");
      }
    }
    tok.kind = Tok::Number;
    tok.text = std::string(src_.substr(pos_, end - pos_));
    tok.number = std::strtod(tok.text.c_str(), nullptr);
    pos_ = end;
    return tok;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Expr parse_all() {
    Expr e = expr();
    if (cur_.kind != Tok::End)
      throw SyntaxError(cur_.pos, {"operator", "end of input"}, describe(cur_));
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) throw SyntaxError(cur_.pos, {what}, describe(cur_));
    advance();
  }

  Expr expr() {
    Expr lhs = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const NodeKind op = cur_.kind == Tok::Plus ? NodeKind::Add : NodeKind::Sub;
      advance();
      lhs = Expr::binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const NodeKind op = cur_.kind == Tok::Star ? NodeKind::Mul : NodeKind::Div;
      advance();
      lhs = Expr::binary(op, std::move(lhs), factor());
    }
    return lhs;
  }

  Expr factor() {
    Expr b = base();
    if (cur_.kind == Tok::Caret) {
      advance();
      return Expr::binary(NodeKind::Pow, std::move(b), factor());
    }
    return b;
  }

  Expr base() {
    switch (cur_.kind) {
      case Tok::Number: {
        const double v = cur_.number;
        advance();
        return Expr::number(v);
      }
      case Tok::Minus:
        advance();
        return Expr::neg(base());
      case Tok::LParen: {
        advance();
        Expr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: return identifier();
      default:
        throw SyntaxError(cur_.pos, {"number", "identifier", "'('", "'-'"}, describe(cur_));
    }
  }

  Expr identifier() {
    const Token tok = cur_;
    advance();
    static constexpr struct {
      const char* name;
      Function fn;
    } kFunctions[] = {{"sin", Function::Sin}, {"cos", Function::Cos}, {"exp", Function::Exp},
                      {"ln", Function::Ln},   {"sqrt", Function::Sqrt}, {"abs", Function::Abs}};
    for (const auto& entry : kFunctions) {
      if (tok.text == entry.name) {
        expect(Tok::LParen, "'('");
        Expr arg = expr();
        expect(Tok::RParen, "')'");
        return Expr::call(entry.fn, std::move(arg));
      }
    }
    const Slot slot = slot_of(tok.text);
    if (slot < 0)
      raise(ErrorCode::UnknownIdentifier, "unknown identifier '" + tok.text + "' at position " +
                                              std::to_string(tok.pos));
    return Expr::var(slot);
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

Expr parse(std::string_view text) {
  bool blank = true;
  for (char c : text) blank = blank && std::isspace(static_cast<unsigned char>(c));
  if (blank) throw SyntaxError(0, {"expression"}, "empty input");
  return Parser(text).parse_all();
}

}  // namespace hahnvar::dsl
