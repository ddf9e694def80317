#pragma once

#include <string_view>

#include "colog/formula.hpp"

namespace colog {

struct ParseOptions {
  // Accept `?Name` leaves; used for axiom schemata only.
  bool allow_metavariables = false;
};

// Grammar, lowest to highest precedence:
//   cond  := iff ("=>" iff)*            left associative
//   iff   := impl ("<=>" impl)*         left associative
//   impl  := disj ("->" impl)?          right associative
//   disj  := conj ("|" conj)*
//   conj  := unary ("&" unary)*
//   unary := ("~" | "[]" | "[i]" | "<>" | "<i>" | "[*]" | "<*>") unary
//          | "B" "(" cond ")" | "O" "(" cond ")" | "(" cond ")"
//          | "true" | "false" | IDENT
// `B` and `O` act as operators only when followed by "(".
//
// Throws ParseError carrying the offending character offset.
Formula parse(std::string_view text, const ParseOptions& options = {});

bool is_valid_atom_name(std::string_view name);

}  // namespace colog
