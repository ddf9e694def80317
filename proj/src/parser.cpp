#include "colog/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "colog/errors.hpp"

namespace colog {

namespace {

enum class Tok {
  Ident,
  Meta,
  True,
  False,
  LParen,
  RParen,
  Not,
  Box,
  IBox,
  Dia,
  IDia,
  AllBox,
  AllDia,
  And,
  Or,
  Implies,
  Iff,
  Cond,
  End,
};

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view text, bool metavars) : text_(text), metavars_(metavars) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (i_ >= text_.size()) {
        out.push_back({Tok::End, "", i_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  bool consume(std::string_view s) {
    if (text_.substr(i_, s.size()) == s) {
      i_ += s.size();
      return true;
    }
    return false;
  }

  // Bracketed modality; whitespace inside the brackets is tolerated.
  Token bracket(std::size_t start, char close) {
    ++i_;
    skip_space();
    Tok t;
    if (i_ < text_.size() && text_[i_] == close) {
      t = close == ']' ? Tok::Box : Tok::Dia;
    } else if (i_ < text_.size() && text_[i_] == 'i') {
      ++i_;
      t = close == ']' ? Tok::IBox : Tok::IDia;
    } else if (i_ < text_.size() && text_[i_] == '*') {
      ++i_;
      t = close == ']' ? Tok::AllBox : Tok::AllDia;
    } else {
      throw ParseError("malformed modal operator", start);
    }
    if (t != Tok::Box && t != Tok::Dia) {
      skip_space();
      if (i_ >= text_.size() || text_[i_] != close) {
        throw ParseError("malformed modal operator", start);
      }
    }
    ++i_;
    return {t, std::string(text_.substr(start, i_ - start)), start};
  }

  Token next() {
    const std::size_t start = i_;
    const char c = text_[i_];
    if (ident_start(c)) {
      while (i_ < text_.size() && ident_char(text_[i_])) ++i_;
      std::string word(text_.substr(start, i_ - start));
      if (word == "true") return {Tok::True, word, start};
      if (word == "false") return {Tok::False, word, start};
      return {Tok::Ident, word, start};
    }
    if (c == '?' && metavars_) {
      ++i_;
      if (i_ >= text_.size() || !ident_start(text_[i_])) {
        throw ParseError("expected metavariable name after '?'", start);
      }
      while (i_ < text_.size() && ident_char(text_[i_])) ++i_;
      return {Tok::Meta, std::string(text_.substr(start, i_ - start)), start};
    }
    if (c == '[') return bracket(start, ']');
    if (consume("<=>")) return {Tok::Iff, "<=>", start};
    if (c == '<') {
      // "<>" "<i>" "<*>"
      return bracket(start, '>');
    }
    if (consume("=>")) return {Tok::Cond, "=>", start};
    if (consume("->")) return {Tok::Implies, "->", start};
    ++i_;
    switch (c) {
      case '(': return {Tok::LParen, "(", start};
      case ')': return {Tok::RParen, ")", start};
      case '~': return {Tok::Not, "~", start};
      case '&': return {Tok::And, "&", start};
      case '|': return {Tok::Or, "|", start};
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view text_;
  bool metavars_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = parse_cond();
    if (peek().type != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok t) {
    if (peek().type != t) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(peek().pos), peek().pos);
  }
  void expect(Tok t, const char* what) {
    if (!accept(t)) {
      fail(std::string("expected ") + what +
           (peek().type == Tok::End ? " but reached end of input" : ", found '" + peek().text + "'"));
    }
  }

  Formula parse_cond() {
    Formula f = parse_iff();
    while (accept(Tok::Cond)) f = cond(f, parse_iff());
    return f;
  }

  Formula parse_iff() {
    Formula f = parse_impl();
    while (accept(Tok::Iff)) f = iff(f, parse_impl());
    return f;
  }

  Formula parse_impl() {
    Formula f = parse_disj();
    if (accept(Tok::Implies)) return implies(f, parse_impl());
    return f;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (accept(Tok::Or)) f = disj(f, parse_conj());
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_unary();
    while (accept(Tok::And)) f = conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Not: take(); return neg(parse_unary());
      case Tok::Box: take(); return box(parse_unary());
      case Tok::IBox: take(); return ibox(parse_unary());
      case Tok::Dia: take(); return dia(parse_unary());
      case Tok::IDia: take(); return idia(parse_unary());
      case Tok::AllBox: take(); return allbox(parse_unary());
      case Tok::AllDia: take(); return alldia(parse_unary());
      case Tok::True: take(); return top();
      case Tok::False: take(); return bottom();
      case Tok::LParen: {
        take();
        Formula f = parse_cond();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Meta: take(); return atom(t.text);
      case Tok::Ident: {
        if ((t.text == "B" || t.text == "O") && peek(1).type == Tok::LParen) {
          const bool is_belief = t.text == "B";
          take();
          take();
          Formula f = parse_cond();
          expect(Tok::RParen, "')'");
          return is_belief ? belief(f) : onlyknow(f);
        }
        take();
        return atom(t.text);
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text, const ParseOptions& options) {
  return Parser(Lexer(text, options.allow_metavariables).run()).run();
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !ident_start(name.front())) return false;
  for (char c : name) {
    if (!ident_char(c)) return false;
  }
  return name != "true" && name != "false";
}

}  // namespace colog
