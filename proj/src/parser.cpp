#include "luka/parser.hpp"

#include <cctype>
#include <vector>

namespace luka {

namespace {

enum class Tok { Ident, Zero, Not, And, Impl, Xor, WeakAnd, WeakOr, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", pos_});
        return out;
      }
      const std::size_t at = pos_;
      const char c = text_[pos_];
      if (c == '0' && !ident_char(peek(1))) {
        ++pos_;
        out.push_back({Tok::Zero, "0", at});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name;
        while (pos_ < text_.size() && ident_char(text_[pos_])) name += text_[pos_++];
        out.push_back({Tok::Ident, name, at});
      } else if (c == '!') {
        ++pos_;
        out.push_back({Tok::Not, "!", at});
      } else if (c == '&') {
        ++pos_;
        out.push_back({Tok::And, "&", at});
      } else if (c == '-') {
        expect('>', at, "'->'");
        out.push_back({Tok::Impl, "->", at});
      } else if (c == '<') {
        // only '<->'
        if (pos_ + 2 >= text_.size() || text_[pos_ + 1] != '-' || text_[pos_ + 2] != '>')
          throw ParseError(at, "expected '<->'");
        pos_ += 3;
        out.push_back({Tok::Iff, "<->", at});
      } else if (c == '/') {
        expect('\\', at, "'/\\'");
        out.push_back({Tok::WeakAnd, "/\\", at});
      } else if (c == '\\') {
        expect('/', at, "'\\/'");
        out.push_back({Tok::WeakOr, "\\/", at});
      } else if (c == '(') {
        if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '+' && text_[pos_ + 2] == ')') {
          pos_ += 3;
          out.push_back({Tok::Xor, "(+)", at});
        } else {
          ++pos_;
          out.push_back({Tok::LParen, "(", at});
        }
      } else if (c == ')') {
        ++pos_;
        out.push_back({Tok::RParen, ")", at});
      } else {
        throw ParseError(at, "unknown token");
      }
    }
  }

 private:
  bool ident_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  char peek(std::size_t k) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  void expect(char next, std::size_t at, const char* what) {
    if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != next)
      throw ParseError(at, std::string("expected ") + what);
    pos_ += 2;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// Precedence, tightest first: ! ; & ; (+) ; /\ ; \/ ; -> (right) ; <-> (non-assoc).
class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = iff_expr();
    if (cur().kind != Tok::End)
      throw ParseError(cur().offset, "unexpected '" + cur().text + "'");
    return f;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  void advance() { ++i_; }
  bool eat(Tok k) {
    if (cur().kind != k) return false;
    advance();
    return true;
  }

  Formula iff_expr() {
    Formula a = impl_expr();
    if (eat(Tok::Iff)) {
      Formula b = impl_expr();
      if (cur().kind == Tok::Iff)
        throw ParseError(cur().offset, "'<->' does not associate; parenthesize");
      return Formula::iff(a, b);
    }
    return a;
  }

  Formula impl_expr() {
    Formula a = weak_or_expr();
    if (eat(Tok::Impl)) return Formula::implies(a, impl_expr());
    return a;
  }

  Formula weak_or_expr() {
    Formula a = weak_and_expr();
    while (eat(Tok::WeakOr)) a = Formula::weak_or(a, weak_and_expr());
    return a;
  }

  Formula weak_and_expr() {
    Formula a = xor_expr();
    while (eat(Tok::WeakAnd)) a = Formula::weak_and(a, xor_expr());
    return a;
  }

  Formula xor_expr() {
    Formula a = and_expr();
    while (eat(Tok::Xor)) a = Formula::strong_or(a, and_expr());
    return a;
  }

  Formula and_expr() {
    Formula a = unary();
    while (eat(Tok::And)) a = Formula::conj(a, unary());
    return a;
  }

  Formula unary() {
    if (eat(Tok::Not)) return Formula::neg(unary());
    return atom();
  }

  Formula atom() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Zero:
        advance();
        return Formula::bottom();
      case Tok::Ident:
        advance();
        return Formula::prop(t.text);
      case Tok::LParen: {
        advance();
        Formula f = iff_expr();
        if (!eat(Tok::RParen))
          throw ParseError(cur().offset, "expected ')'");
        return f;
      }
      case Tok::End:
        throw ParseError(t.offset, "unexpected end of input");
      default:
        throw ParseError(t.offset, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse(const std::string& text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace luka
