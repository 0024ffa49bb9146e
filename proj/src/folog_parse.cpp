#include <cctype>
#include <string>
#include <vector>

#include "monolith/errors.hpp"
#include "monolith/folog.hpp"

namespace monolith::folog {

namespace {

enum class Tok {
  Ident, One, Star, Prime, LParen, RParen, Eq, Neq, Bang, Amp, Pipe,
  Arrow, DArrow, Dot, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::One: return "'1'";
    case Tok::Star: return "'*'";
    case Tok::Prime: return "'''";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::DArrow: return "'<->'";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, text.substr(pos, len), pos});
      i += len;
    };
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      push(Tok::Ident, j - i);
    } else if (c == '1') {
      push(Tok::One, 1);
    } else if (text.compare(i, 3, "<->") == 0) {
      push(Tok::DArrow, 3);
    } else if (text.compare(i, 2, "->") == 0) {
      push(Tok::Arrow, 2);
    } else if (text.compare(i, 2, "!=") == 0) {
      push(Tok::Neq, 2);
    } else {
      switch (c) {
        case '*': push(Tok::Star, 1); break;
        case '\'': push(Tok::Prime, 1); break;
        case '(': push(Tok::LParen, 1); break;
        case ')': push(Tok::RParen, 1); break;
        case '=': push(Tok::Eq, 1); break;
        case '!': push(Tok::Bang, 1); break;
        case '&': push(Tok::Amp, 1); break;
        case '|': push(Tok::Pipe, 1); break;
        case '.': push(Tok::Dot, 1); break;
        default:
          throw SyntaxError(pos, "a token",
                            "unexpected character '" + std::string(1, c) +
                                "' at position " + std::to_string(pos));
      }
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

bool is_keyword(const Token& t) {
  return t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists");
}

// Internal backtracking failure; the furthest one is reported.
struct ParseFail {
  std::size_t pos;
  std::string expected;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  FormulaPtr run() {
    FormulaPtr f;
    try {
      f = formula();
      expect(Tok::End);
    } catch (const ParseFail& fail) {
      const ParseFail& best = fail.pos >= best_.pos ? fail : best_;
      throw SyntaxError(best.pos, best.expected,
                        "syntax error at position " + std::to_string(best.pos) +
                            ": expected " + best.expected);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }

  [[noreturn]] void fail(const std::string& expected) {
    ParseFail f{peek().pos, expected};
    if (f.pos >= best_.pos) best_ = f;
    throw f;
  }

  bool accept(Tok k) {
    if (peek().kind == k) {
      ++idx_;
      return true;
    }
    return false;
  }

  void expect(Tok k) {
    if (!accept(k)) fail(tok_name(k));
  }

  FormulaPtr formula() {
    if (is_keyword(peek())) {
      bool universal = peek().text == "forall";
      ++idx_;
      if (peek().kind != Tok::Ident || is_keyword(peek()))
        fail("variable name");
      std::string var = peek().text;
      ++idx_;
      expect(Tok::Dot);
      FormulaPtr body = formula();
      return universal ? f_forall(var, body) : f_exists(var, body);
    }
    return iff();
  }

  FormulaPtr iff() {
    FormulaPtr f = implication();
    while (accept(Tok::DArrow)) f = f_iff(f, implication());
    return f;
  }

  FormulaPtr implication() {
    FormulaPtr f = disjunction();
    while (accept(Tok::Arrow)) f = f_implies(f, disjunction());
    return f;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (accept(Tok::Pipe)) f = f_or(f, conjunction());
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (accept(Tok::Amp)) f = f_and(f, unary());
    return f;
  }

  FormulaPtr unary() {
    if (accept(Tok::Bang)) return f_not(unary());
    // An atom (term = term) and a parenthesized formula can both start with
    // '('; try the atom first and backtrack.
    std::size_t saved = idx_;
    try {
      return atom();
    } catch (const ParseFail&) {
      idx_ = saved;
    }
    if (accept(Tok::LParen)) {
      FormulaPtr f = formula();
      expect(Tok::RParen);
      return f;
    }
    fail("an equation, '!', or '('");
  }

  FormulaPtr atom() {
    TermPtr l = term();
    if (accept(Tok::Eq)) return f_eq(l, term());
    if (accept(Tok::Neq)) return f_not(f_eq(l, term()));
    fail("'=' or '!='");
  }

  TermPtr term() {
    TermPtr t = factor();
    while (accept(Tok::Star)) t = t_prod(t, factor());
    return t;
  }

  TermPtr factor() {
    TermPtr t;
    if (peek().kind == Tok::Ident && !is_keyword(peek())) {
      t = t_var(peek().text);
      ++idx_;
    } else if (accept(Tok::One)) {
      t = t_one();
    } else if (accept(Tok::LParen)) {
      t = term();
      expect(Tok::RParen);
    } else {
      fail("identifier, '1', or '('");
    }
    while (accept(Tok::Prime)) t = t_inv(t);
    return t;
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  ParseFail best_{0, "a formula"};
};

}  // namespace

FormulaPtr parse(const std::string& text) {
  return Parser(lex(text)).run();
}

}  // namespace monolith::folog
