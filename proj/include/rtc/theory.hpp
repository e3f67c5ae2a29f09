#pragma once

// Theory files: a name, symbol declarations and axiom sequents.
//
//   theory arith
//   const 0
//   fn s/1
//   pred lt/2
//   pairconst c
//   axiom |- ~(s(x) = 0)
//
// '#' starts a comment. Free variables of an axiom are schematic.

#include <string>

#include "rtc/kernel.hpp"

namespace rtc {

Theory parse_theory(const std::string& text);
Theory load_theory(const std::string& path);
std::string write_theory(const Theory& t);

namespace detail {
// Shared with the proof file reader: handles const/fn/pred/pairconst lines.
// Returns false when the line is not a declaration.
bool parse_declaration(const std::string& line, Signature& sig, std::size_t lineno);
std::string write_declarations(const Signature& sig);
std::string trim(const std::string& s);
std::string read_file(const std::string& path);
}  // namespace detail

}  // namespace rtc
