#include "gkml/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace gkml {

ParseError::ParseError(std::string msg, int line_, int column_, std::string expected_tokens)
    : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_) +
            (expected_tokens.empty() ? "" : " (expected " + expected_tokens + ")")),
      line(line_),
      column(column_),
      expected(std::move(expected_tokens)) {}

namespace {

enum class Tok {
  Ident,
  Bot,
  Top,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Rational,
  Tilde,
  BoxTok,
  DiaTok,
  Amp,
  Pipe,
  Arrow,
  DArrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Bot: return "'bot'";
    case Tok::Top: return "'top'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Rational: return "rational";
    case Tok::Tilde: return "'~'";
    case Tok::BoxTok: return "'[]'";
    case Tok::DiaTok: return "'<>'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::DArrow: return "'<->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= s_.size()) return {Tok::End, "", line, col};
    char c = s_[pos_];
    if (c >= 'a' && c <= 'z') {
      std::string id;
      while (pos_ < s_.size() && (std::islower((unsigned char)s_[pos_]) ||
                                  std::isdigit((unsigned char)s_[pos_]) || s_[pos_] == '_'))
        id.push_back(advance());
      if (id == "bot") return {Tok::Bot, id, line, col};
      if (id == "top") return {Tok::Top, id, line, col};
      return {Tok::Ident, id, line, col};
    }
    if (std::isdigit((unsigned char)c)) {
      std::string num;
      while (pos_ < s_.size() && (std::isdigit((unsigned char)s_[pos_]) || s_[pos_] == '/'))
        num.push_back(advance());
      return {Tok::Rational, num, line, col};
    }
    switch (c) {
      case '{': advance(); return {Tok::LBrace, "{", line, col};
      case '}': advance(); return {Tok::RBrace, "}", line, col};
      case '(': advance(); return {Tok::LParen, "(", line, col};
      case ')': advance(); return {Tok::RParen, ")", line, col};
      case '~': advance(); return {Tok::Tilde, "~", line, col};
      case '&': advance(); return {Tok::Amp, "&", line, col};
      case '|': advance(); return {Tok::Pipe, "|", line, col};
      case '[':
        advance();
        if (pos_ < s_.size() && s_[pos_] == ']') { advance(); return {Tok::BoxTok, "[]", line, col}; }
        throw ParseError("stray '['", line, col, "']'");
      case '<':
        advance();
        if (pos_ < s_.size() && s_[pos_] == '>') { advance(); return {Tok::DiaTok, "<>", line, col}; }
        if (pos_ + 1 < s_.size() && s_[pos_] == '-' && s_[pos_ + 1] == '>') {
          advance(); advance();
          return {Tok::DArrow, "<->", line, col};
        }
        throw ParseError("stray '<'", line, col, "'>', '->'");
      case '-':
        advance();
        if (pos_ < s_.size() && s_[pos_] == '>') { advance(); return {Tok::Arrow, "->", line, col}; }
        throw ParseError("stray '-'", line, col, "'>'");
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col, "");
    }
  }

 private:
  char advance() {
    char c = s_[pos_++];
    if (c == '\n') { ++line_; col_ = 1; } else ++col_;
    return c;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) advance();
  }
  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

  Formula run() {
    Formula f = parse_iff();
    expect(Tok::End);
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("unexpected " + std::string(tok_name(cur_.kind)), cur_.line, cur_.col, expected);
  }

  void expect(Tok t) {
    if (cur_.kind != t) fail(tok_name(t));
    cur_ = lex_.next();
  }

  bool accept(Tok t) {
    if (cur_.kind != t) return false;
    cur_ = lex_.next();
    return true;
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept(Tok::DArrow)) f = Formula::iff(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept(Tok::Arrow)) return Formula::implies(f, parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Pipe)) f = Formula::or_(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::Amp)) f = Formula::and_(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept(Tok::Tilde)) return Formula::not_(parse_unary());
    if (accept(Tok::BoxTok)) return Formula::box(parse_unary());
    if (accept(Tok::DiaTok)) return Formula::diamond(parse_unary());
    return parse_atomterm();
  }

  Formula parse_atomterm() {
    switch (cur_.kind) {
      case Tok::Ident: {
        std::string name = cur_.text;
        cur_ = lex_.next();
        return Formula::atom(std::move(name));
      }
      case Tok::Bot:
        cur_ = lex_.next();
        return Formula::bottom();
      case Tok::Top:
        cur_ = lex_.next();
        return Formula::top();
      case Tok::LBrace: {
        cur_ = lex_.next();
        if (cur_.kind != Tok::Rational) fail("rational");
        TruthValue v = [&] {
          try {
            return TruthValue::parse(cur_.text);
          } catch (const Error& e) {
            throw ParseError(e.what(), cur_.line, cur_.col, "rational in [0,1]");
          }
        }();
        cur_ = lex_.next();
        expect(Tok::RBrace);
        return Formula::constant(std::move(v));
      }
      case Tok::LParen: {
        cur_ = lex_.next();
        Formula f = parse_iff();
        expect(Tok::RParen);
        return f;
      }
      default:
        fail("identifier, 'bot', 'top', '{', '(', '~', '[]', '<>'");
    }
  }

  Lexer lex_;
  Token cur_;
};

// Precedence levels used by the printer; higher binds tighter.
constexpr int kPrecImp = 2;
constexpr int kPrecOr = 3;
constexpr int kPrecAnd = 4;
constexpr int kPrecUnary = 5;
constexpr int kPrecAtom = 6;

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::Implies: return kPrecImp;
    case Kind::Or: return kPrecOr;
    case Kind::And: return kPrecAnd;
    case Kind::Not:
    case Kind::Box:
    case Kind::Diamond: return kPrecUnary;
    default: return kPrecAtom;
  }
}

void print_rec(std::string& out, const Formula& f, int ctx, const PrintOptions& o) {
  const int prec = precedence(f);
  const bool paren = prec < ctx;
  if (paren) out.push_back('(');
  switch (f.kind()) {
    case Kind::Atom:
      out += f.name();
      break;
    case Kind::Bottom:
      out += o.unicode ? "⊥" : "bot";
      break;
    case Kind::Top:
      out += o.unicode ? "⊤" : "top";
      break;
    case Kind::Const:
      out += "{" + f.value().str() + "}";
      break;
    case Kind::Not:
      out += o.unicode ? "¬" : "~";
      print_rec(out, f.sub(), kPrecUnary, o);
      break;
    case Kind::Box:
      out += o.unicode ? "□" : "[]";
      print_rec(out, f.sub(), kPrecUnary, o);
      break;
    case Kind::Diamond:
      out += o.unicode ? "◇" : "<>";
      print_rec(out, f.sub(), kPrecUnary, o);
      break;
    case Kind::And:
      print_rec(out, f.left(), kPrecAnd, o);
      out += o.unicode ? " ∧ " : " & ";
      print_rec(out, f.right(), kPrecAnd + 1, o);
      break;
    case Kind::Or:
      print_rec(out, f.left(), kPrecOr, o);
      out += o.unicode ? " ∨ " : " | ";
      print_rec(out, f.right(), kPrecOr + 1, o);
      break;
    case Kind::Implies:
      print_rec(out, f.left(), kPrecImp + 1, o);
      out += o.unicode ? " → " : " -> ";
      print_rec(out, f.right(), kPrecImp, o);
      break;
  }
  if (paren) out.push_back(')');
}

}  // namespace

Formula parse(const std::string& text) {
  return Parser(text).run();
}

std::string print(const Formula& f, const PrintOptions& opts) {
  std::string out;
  print_rec(out, f, 0, opts);
  return out;
}

}  // namespace gkml
