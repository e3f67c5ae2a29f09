#include "rtc/theory.hpp"

#include <fstream>
#include <sstream>

#include "rtc/errors.hpp"
#include "rtc/parser.hpp"

namespace rtc {

namespace detail {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::pair<std::string, int> name_arity(const std::string& rest, std::size_t lineno) {
  auto slash = rest.find('/');
  if (slash == std::string::npos) throw FormatError(lineno, "expected name/arity, got '" + rest + "'");
  std::string name = trim(rest.substr(0, slash));
  try {
    int k = std::stoi(rest.substr(slash + 1));
    if (k < 0 || name.empty()) throw FormatError(lineno, "bad declaration '" + rest + "'");
    return {name, k};
  } catch (const std::logic_error&) {
    throw FormatError(lineno, "bad arity in '" + rest + "'");
  }
}

void declare(std::map<std::string, int>& table, const std::pair<std::string, int>& na, std::size_t lineno) {
  auto [it, fresh] = table.emplace(na);
  if (!fresh && it->second != na.second) throw FormatError(lineno, "conflicting arity for '" + na.first + "'");
}

}  // namespace

bool parse_declaration(const std::string& line, Signature& sig, std::size_t lineno) {
  std::istringstream in(line);
  std::string kw;
  in >> kw;
  std::string rest;
  std::getline(in, rest);
  rest = trim(rest);
  if (kw == "const") {
    if (rest.empty()) throw FormatError(lineno, "const needs a name");
    sig.constants.insert(rest);
  } else if (kw == "pairconst") {
    if (rest.empty()) throw FormatError(lineno, "pairconst needs a name");
    sig.constants.insert(rest);
    sig.pair_constant = rest;
  } else if (kw == "fn") {
    declare(sig.functions, name_arity(rest, lineno), lineno);
  } else if (kw == "pred") {
    declare(sig.predicates, name_arity(rest, lineno), lineno);
  } else {
    return false;
  }
  return true;
}

std::string write_declarations(const Signature& sig) {
  std::ostringstream out;
  for (const auto& c : sig.constants)
    if (c != sig.pair_constant) out << "const " << c << "\n";
  if (sig.pair_constant) out << "pairconst " << *sig.pair_constant << "\n";
  for (const auto& [f, k] : sig.functions) out << "fn " << f << "/" << k << "\n";
  for (const auto& [p, k] : sig.predicates) out << "pred " << p << "/" << k << "\n";
  return out.str();
}

}  // namespace detail

Theory parse_theory(const std::string& text) {
  Theory t;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::vector<std::pair<std::size_t, std::string>> axioms;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.rfind("theory", 0) == 0) {
      t.name = detail::trim(line.substr(6));
    } else if (line.rfind("axiom", 0) == 0) {
      axioms.emplace_back(lineno, line.substr(5));
    } else if (!detail::parse_declaration(line, t.sig, lineno)) {
      throw FormatError(lineno, "unrecognised line '" + line + "'");
    }
  }
  // Axioms are parsed after all declarations so order in the file is free.
  for (const auto& [ln, src] : axioms) {
    try {
      t.axioms.push_back(parse_sequent(src, t.sig, ParseOptions{true, false}));
    } catch (const SyntaxError& e) {
      throw FormatError(ln, e.what());
    }
  }
  return t;
}

Theory load_theory(const std::string& path) { return parse_theory(detail::read_file(path)); }

std::string write_theory(const Theory& t) {
  std::ostringstream out;
  out << "theory " << (t.name.empty() ? "unnamed" : t.name) << "\n" << detail::write_declarations(t.sig);
  for (const auto& a : t.axioms) out << "axiom " << print(a) << "\n";
  return out.str();
}

}  // namespace rtc
