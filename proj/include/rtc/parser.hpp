#pragma once

#include <string_view>

#include "rtc/syntax.hpp"

namespace rtc {

struct ParseOptions {
  // Declare unseen function and predicate symbols on first use instead of
  // throwing UnknownSymbol. Bare identifiers in term position are variables
  // unless declared constants or numerals.
  bool infer_signature = false;
  // Accept identifiers in the reserved _vN namespace (proof files do).
  bool allow_reserved = false;
};

// Strict parsing against a fixed signature.
FormulaPtr parse_formula(std::string_view text, const Signature& sig);
Sequent parse_sequent(std::string_view text, const Signature& sig);
TermPtr parse_term(std::string_view text, const Signature& sig);

// Parsing that may grow `sig` when opts.infer_signature is set.
FormulaPtr parse_formula(std::string_view text, Signature& sig, const ParseOptions& opts);
Sequent parse_sequent(std::string_view text, Signature& sig, const ParseOptions& opts);
TermPtr parse_term(std::string_view text, Signature& sig, const ParseOptions& opts);

}  // namespace rtc
