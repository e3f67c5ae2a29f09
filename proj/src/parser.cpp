#include "rtc/parser.hpp"

#include <cctype>

#include "rtc/errors.hpp"

namespace rtc {
namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Lt, Gt, Eq, Tilde, And, Or, Arrow, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    auto two = s.substr(i, 2);
    if (two == "/\\") {
      out.push_back({Tok::And, "/\\", i});
      i += 2;
    } else if (two == "\\/") {
      out.push_back({Tok::Or, "\\/", i});
      i += 2;
    } else if (two == "->") {
      out.push_back({Tok::Arrow, "->", i});
      i += 2;
    } else if (two == "|-") {
      out.push_back({Tok::Turnstile, "|-", i});
      i += 2;
    } else {
      Tok k;
      switch (c) {
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ',': k = Tok::Comma; break;
        case '.': k = Tok::Dot; break;
        case '<': k = Tok::Lt; break;
        case '>': k = Tok::Gt; break;
        case '=': k = Tok::Eq; break;
        case '~': k = Tok::Tilde; break;
        default: throw SyntaxError(i, "a token, found '" + std::string(1, c) + "'");
      }
      out.push_back({k, std::string(1, c), i});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "rtc" || s == "bot" || s == "top";
}

bool is_numeral(const std::string& s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return !s.empty();
}

class Parser {
 public:
  Parser(std::string_view text, Signature& sig, const ParseOptions& opts) : toks_(lex(text)), sig_(sig), opts_(opts) {}

  FormulaPtr formula_only() {
    auto f = form();
    expect(Tok::End, "end of input");
    return canonicalize(f);
  }

  TermPtr term_only() {
    auto t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Sequent sequent() {
    std::vector<FormulaPtr> ante, succ;
    if (peek().kind != Tok::Turnstile) {
      ante.push_back(canonicalize(form()));
      while (accept(Tok::Comma)) ante.push_back(canonicalize(form()));
    }
    expect(Tok::Turnstile, "'|-'");
    if (peek().kind != Tok::End) {
      succ.push_back(canonicalize(form()));
      while (accept(Tok::Comma)) succ.push_back(canonicalize(form()));
    }
    expect(Tok::End, "end of input");
    return Sequent(FormulaSet(std::move(ante)), FormulaSet(std::move(succ)));
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) throw SyntaxError(peek().offset, what);
    return next();
  }

  bool at_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  std::string binder_name() {
    const Token& t = expect(Tok::Ident, "a variable name");
    if (is_keyword(t.text) || is_numeral(t.text)) throw SyntaxError(t.offset, "a variable name");
    check_reserved(t);
    return t.text;
  }

  void check_reserved(const Token& t) const {
    if (!opts_.allow_reserved && t.text.rfind(kReservedPrefix, 0) == 0)
      throw SyntaxError(t.offset, "an identifier outside the reserved _v namespace");
  }

  FormulaPtr form() {
    auto lhs = disj();
    if (accept(Tok::Arrow)) return Formula::implies(lhs, form());
    return lhs;
  }

  FormulaPtr disj() {
    auto lhs = conj();
    while (accept(Tok::Or)) lhs = Formula::disj(lhs, conj());
    return lhs;
  }

  FormulaPtr conj() {
    auto lhs = unary();
    while (accept(Tok::And)) lhs = Formula::conj(lhs, unary());
    return lhs;
  }

  FormulaPtr unary() {
    if (accept(Tok::Tilde)) return Formula::neg(unary());
    if (at_keyword("forall") || at_keyword("exists")) {
      bool all = next().text == "forall";
      std::string v = binder_name();
      expect(Tok::Dot, "'.'");
      auto body = form();
      return all ? Formula::forall(v, body) : Formula::exists(v, body);
    }
    return primary();
  }

  FormulaPtr primary() {
    if (peek().kind == Tok::LParen) {
      if (peek(1).kind == Tok::Ident && peek(1).text == "rtc") {
        next();
        next();
        std::string x = binder_name();
        std::size_t yoff = peek().offset;
        std::string y = binder_name();
        if (x == y) throw SyntaxError(yoff, "a second binder distinct from the first");
        expect(Tok::Dot, "'.'");
        auto body = form();
        expect(Tok::RParen, "')'");
        expect(Tok::LParen, "'('");
        auto s = term();
        expect(Tok::Comma, "','");
        auto t = term();
        expect(Tok::RParen, "')'");
        return Formula::rtc(x, y, body, s, t);
      }
      next();
      auto f = form();
      expect(Tok::RParen, "')'");
      return f;
    }
    return atom();
  }

  FormulaPtr atom() {
    if (at_keyword("bot")) {
      next();
      return Formula::bot();
    }
    if (at_keyword("top")) {
      next();
      return Formula::top();
    }
    if (peek().kind == Tok::Lt) {
      auto lhs = term();
      expect(Tok::Eq, "'='");
      return Formula::eq(lhs, term());
    }
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) throw SyntaxError(peek().offset, "a formula");
    const Token& id = peek();
    if (peek(1).kind == Tok::LParen) {
      next();
      next();
      std::vector<TermPtr> args = term_list();
      if (peek().kind == Tok::Eq) {
        auto lhs = Term::app(id.text, args);
        check_function(id, static_cast<int>(args.size()));
        next();
        return Formula::eq(lhs, term());
      }
      check_predicate(id, static_cast<int>(args.size()));
      return Formula::pred(id.text, std::move(args));
    }
    if (peek(1).kind == Tok::Eq) {
      auto lhs = term();
      next();
      return Formula::eq(lhs, term());
    }
    next();
    check_predicate(id, 0);
    return Formula::pred(id.text, {});
  }

  // Arguments after an opening parenthesis, consuming the closing one.
  std::vector<TermPtr> term_list() {
    std::vector<TermPtr> args;
    args.push_back(term());
    while (accept(Tok::Comma)) args.push_back(term());
    expect(Tok::RParen, "')'");
    return args;
  }

  TermPtr term() {
    if (accept(Tok::Lt)) {
      auto a = term();
      expect(Tok::Comma, "','");
      auto b = term();
      expect(Tok::Gt, "'>'");
      declare_pair();
      return Term::pair(a, b);
    }
    const Token& id = expect(Tok::Ident, "a term");
    if (is_keyword(id.text)) throw SyntaxError(id.offset, "a term");
    if (accept(Tok::LParen)) {
      auto args = term_list();
      check_function(id, static_cast<int>(args.size()));
      return Term::app(id.text, std::move(args));
    }
    if (sig_.constants.count(id.text)) return Term::constant(id.text);
    if (is_numeral(id.text)) {
      if (!opts_.infer_signature) throw UnknownSymbol(id.text);
      sig_.constants.insert(id.text);
      return Term::constant(id.text);
    }
    check_reserved(id);
    return Term::var(id.text);
  }

  void declare_pair() {
    auto it = sig_.functions.find(std::string(kPairSymbol));
    if (it != sig_.functions.end()) {
      if (it->second != 2) throw ArityMismatch(std::string(kPairSymbol), it->second, 2);
      return;
    }
    if (!opts_.infer_signature) throw UnknownSymbol(std::string(kPairSymbol));
    sig_.functions.emplace(std::string(kPairSymbol), 2);
  }

  void check_symbol(std::map<std::string, int>& table, const Token& id, int arity) {
    auto it = table.find(id.text);
    if (it == table.end()) {
      if (!opts_.infer_signature) throw UnknownSymbol(id.text);
      check_reserved(id);
      table.emplace(id.text, arity);
      return;
    }
    if (it->second != arity) throw ArityMismatch(id.text, it->second, arity);
  }

  void check_function(const Token& id, int arity) { check_symbol(sig_.functions, id, arity); }
  void check_predicate(const Token& id, int arity) { check_symbol(sig_.predicates, id, arity); }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature& sig_;
  const ParseOptions& opts_;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  return parse_formula(text, copy, ParseOptions{});
}

Sequent parse_sequent(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  return parse_sequent(text, copy, ParseOptions{});
}

TermPtr parse_term(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  return parse_term(text, copy, ParseOptions{});
}

FormulaPtr parse_formula(std::string_view text, Signature& sig, const ParseOptions& opts) {
  return Parser(text, sig, opts).formula_only();
}

Sequent parse_sequent(std::string_view text, Signature& sig, const ParseOptions& opts) {
  return Parser(text, sig, opts).sequent();
}

TermPtr parse_term(std::string_view text, Signature& sig, const ParseOptions& opts) {
  return Parser(text, sig, opts).term_only();
}

}  // namespace rtc
