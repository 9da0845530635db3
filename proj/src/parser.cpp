#include "metaterm/parser.hpp"

#include <cctype>
#include <map>

namespace metaterm {

namespace {

enum class Tok {
  Atom,     // lowercase name or quoted
  Var,      // uppercase/underscore name
  Number,   // digits with optional decimal point
  Punct,    // ( ) [ ] | , .
  Neck,     // :-
  Eq,       // =
  Neq,      // \=
  Naf,      // \+
  End
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
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
  void error(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  char cur() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char next() const { return pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0'; }

  void bump() {
    if (cur() == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(cur()))) {
        bump();
      } else if (cur() == '%') {
        while (pos_ < src_.size() && cur() != '\n') bump();
      } else if (cur() == '/' && next() == '*') {
        bump();
        bump();
        while (pos_ < src_.size() && !(cur() == '*' && next() == '/')) bump();
        if (pos_ >= src_.size()) error("unterminated comment");
        bump();
        bump();
      } else {
        break;
      }
    }
  }

  void advance() {
    skip_space();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = cur();
    if (c == '!') error("cut is not supported");
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) {
        s += cur();
        bump();
      }
      if (s == "is") error("arithmetic is not supported");
      tok_.kind = Tok::Atom;
      tok_.text = std::move(s);
      return;
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) {
        s += cur();
        bump();
      }
      tok_.kind = Tok::Var;
      tok_.text = std::move(s);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(cur()))) {
        s += cur();
        bump();
      }
      if (cur() == '.' && std::isdigit(static_cast<unsigned char>(next()))) {
        s += cur();
        bump();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(cur()))) {
          s += cur();
          bump();
        }
      }
      tok_.kind = Tok::Number;
      tok_.text = std::move(s);
      return;
    }
    if (c == '\'') {
      bump();
      std::string s;
      while (pos_ < src_.size() && cur() != '\'') {
        if (cur() == '\\' && (next() == '\'' || next() == '\\')) bump();
        s += cur();
        bump();
      }
      if (pos_ >= src_.size()) error("unterminated quoted atom");
      bump();
      tok_.kind = Tok::Atom;
      tok_.text = std::move(s);
      return;
    }
    if (c == ':' && next() == '-') {
      bump();
      bump();
      tok_.kind = Tok::Neck;
      return;
    }
    if (c == '\\' && next() == '+') {
      bump();
      bump();
      tok_.kind = Tok::Naf;
      return;
    }
    if (c == '\\' && next() == '=') {
      bump();
      bump();
      tok_.kind = Tok::Neq;
      return;
    }
    if (c == '=') {
      if (next() == '<' || next() == ':' || next() == '.') error("arithmetic is not supported");
      bump();
      tok_.kind = Tok::Eq;
      return;
    }
    if (c == '<' || c == '>') error("arithmetic is not supported");
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == '|' || c == ',' || c == '.') {
      tok_.kind = Tok::Punct;
      tok_.text = std::string(1, c);
      bump();
      return;
    }
    error(std::string("unexpected character '") + c + "'");
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& src, VarSupply& supply) : lex_(src), supply_(supply) {}

  Program program() {
    std::vector<Clause> clauses;
    while (lex_.peek().kind != Tok::End) {
      scope_.clear();
      clauses.push_back(clause());
    }
    return Program(std::move(clauses));
  }

  Term single_term() {
    Term t = term();
    expect_end();
    return t;
  }

  QuerySeq query() {
    QuerySeq q = body();
    if (lex_.peek().kind == Tok::Punct && lex_.peek().text == ".") lex_.take();
    expect_end();
    return q;
  }

 private:
  [[noreturn]] void error_at(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.col);
  }

  void expect_punct(const std::string& p) {
    Token t = lex_.take();
    if (t.kind != Tok::Punct || t.text != p)
      error_at(t, "expected '" + p + "'");
  }

  void expect_end() {
    if (lex_.peek().kind != Tok::End) error_at(lex_.peek(), "trailing input");
  }

  Term variable(const std::string& name) {
    if (name == "_") return Term::var("_", supply_.fresh());
    auto it = scope_.find(name);
    if (it != scope_.end()) return it->second;
    Term v = Term::var(name, supply_.fresh());
    scope_.emplace(name, v);
    return v;
  }

  Clause clause() {
    Token start = lex_.peek();
    Term head = term();
    if (head.is_var()) error_at(start, "clause head must be an atom");
    Clause c;
    c.head = head;
    if (lex_.peek().kind == Tok::Neck) {
      lex_.take();
      c.body = body();
    }
    Token dot = lex_.take();
    if (dot.kind != Tok::Punct || dot.text != ".") error_at(dot, "expected '.' after clause");
    return c;
  }

  QuerySeq body() {
    QuerySeq lits;
    lits.push_back(literal());
    while (lex_.peek().kind == Tok::Punct && lex_.peek().text == ",") {
      lex_.take();
      lits.push_back(literal());
    }
    return lits;
  }

  Literal literal() {
    if (lex_.peek().kind == Tok::Naf) {
      lex_.take();
      Term a = term();
      return Literal::neg(a);
    }
    Token start = lex_.peek();
    Term t = term();
    // not/1 in body position is an accepted negation alias.
    if (t.is_compound() && t.symbol() == "not" && t.arity() == 1) return Literal::neg(t.args()[0]);
    if (t.is_var()) error_at(start, "a body literal must be an atom");
    return Literal::pos(t);
  }

  // term with optional infix =, \= at this level
  Term term() {
    Term left = primary();
    if (lex_.peek().kind == Tok::Eq) {
      lex_.take();
      Term right = primary();
      return Term::compound("=", {left, right});
    }
    if (lex_.peek().kind == Tok::Neq) {
      lex_.take();
      Term right = primary();
      return Term::compound("\\=", {left, right});
    }
    return left;
  }

  Term primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::Var:
        return variable(t.text);
      case Tok::Number:
        return Term::constant(t.text);
      case Tok::Naf: {
        // \+ used as a term constructor, e.g. inside clause encodings.
        if (lex_.peek().kind == Tok::Punct && lex_.peek().text == "(") {
          lex_.take();
          Term inner = paren_term();
          expect_punct(")");
          return Term::compound("\\+", {inner});
        }
        return Term::compound("\\+", {primary()});
      }
      case Tok::Atom: {
        if (lex_.peek().kind == Tok::Punct && lex_.peek().text == "(") {
          lex_.take();
          std::vector<Term> args;
          args.push_back(paren_arg());
          while (lex_.peek().kind == Tok::Punct && lex_.peek().text == ",") {
            lex_.take();
            args.push_back(paren_arg());
          }
          expect_punct(")");
          return Term::compound(t.text, std::move(args));
        }
        return Term::constant(t.text);
      }
      case Tok::Punct:
        if (t.text == "(") {
          Term inner = paren_term();
          expect_punct(")");
          return inner;
        }
        if (t.text == "[") return list_tail();
        error_at(t, "unexpected '" + t.text + "'");
      default:
        error_at(t, "expected a term");
    }
  }

  // Inside explicit parentheses a comma builds a right-nested ","-term and
  // :- builds a clause-shaped term, as in solve(A, (A :- Proof)).
  Term paren_term() {
    Term first = term();
    if (lex_.peek().kind == Tok::Neck) {
      lex_.take();
      Term rhs = paren_term();
      return Term::compound(":-", {first, rhs});
    }
    if (lex_.peek().kind == Tok::Punct && lex_.peek().text == ",") {
      lex_.take();
      Term rest = paren_term();
      return Term::compound(",", {first, rest});
    }
    return first;
  }

  // An argument of a compound: commas separate arguments, so stop at them,
  // but a parenthesized sub-term may still contain them.
  Term paren_arg() { return term(); }

  Term list_tail() {
    if (lex_.peek().kind == Tok::Punct && lex_.peek().text == "]") {
      lex_.take();
      return Term::constant("[]");
    }
    std::vector<Term> elems;
    elems.push_back(term());
    while (lex_.peek().kind == Tok::Punct && lex_.peek().text == ",") {
      lex_.take();
      elems.push_back(term());
    }
    Term tail = Term::constant("[]");
    if (lex_.peek().kind == Tok::Punct && lex_.peek().text == "|") {
      lex_.take();
      tail = term();
    }
    expect_punct("]");
    Term out = tail;
    for (int i = static_cast<int>(elems.size()) - 1; i >= 0; --i)
      out = Term::compound(".", {elems[i], out});
    return out;
  }

  Lexer lex_;
  VarSupply& supply_;
  std::map<std::string, Term> scope_;
};

}  // namespace

Program parse_program(const std::string& text, VarSupply& supply) {
  return Parser(text, supply).program();
}

SourceProgram parse_source(const std::string& text, std::string path) {
  SourceProgram sp;
  sp.path = std::move(path);
  sp.program = parse_program(text, sp.supply);
  return sp;
}

Term parse_term(const std::string& text, VarSupply& supply) {
  return Parser(text, supply).single_term();
}

QuerySeq parse_query(const std::string& text, VarSupply& supply) {
  return Parser(text, supply).query();
}

}  // namespace metaterm
