#include "colog/schema.hpp"

#include <array>

#include "colog/errors.hpp"
#include "colog/parser.hpp"

namespace colog {

namespace {

bool is_metavariable(const Formula& f) {
  return f.kind() == Kind::Atom && !f.name().empty() && f.name().front() == '?';
}

std::string metavariable_name(const Formula& f) { return f.name().substr(1); }

void collect_metavars(const Formula& f, std::set<std::string>& out) {
  if (is_metavariable(f)) {
    out.insert(metavariable_name(f));
    return;
  }
  switch (arity(f.kind())) {
    case 0: break;
    case 1: collect_metavars(f.arg(), out); break;
    default:
      collect_metavars(f.lhs(), out);
      collect_metavars(f.rhs(), out);
  }
}

Formula substitute(const Formula& f, const Binding& b) {
  if (is_metavariable(f)) {
    auto it = b.find(metavariable_name(f));
    if (it == b.end()) throw InputError("no binding for metavariable " + f.name());
    return it->second;
  }
  switch (arity(f.kind())) {
    case 0: return f;
    case 1: return Formula::make_unary(f.kind(), substitute(f.arg(), b));
    default:
      return Formula::make_binary(f.kind(), substitute(f.lhs(), b), substitute(f.rhs(), b));
  }
}

bool match_into(const Formula& pat, const Formula& f, Binding& b) {
  if (is_metavariable(pat)) {
    auto [it, inserted] = b.emplace(metavariable_name(pat), f);
    return inserted || it->second == f;
  }
  if (pat.kind() != f.kind()) return false;
  switch (arity(pat.kind())) {
    case 0: return pat.name() == f.name();
    case 1: return match_into(pat.arg(), f.arg(), b);
    default: return match_into(pat.lhs(), f.lhs(), b) && match_into(pat.rhs(), f.rhs(), b);
  }
}

}  // namespace

Schema::Schema(Formula pattern) : pattern_(std::move(pattern)) {
  collect_metavars(pattern_, metavars_);
}

Schema Schema::parse(std::string_view pattern) {
  return Schema(colog::parse(pattern, ParseOptions{.allow_metavariables = true}));
}

Formula Schema::instantiate(const Binding& binding) const {
  return substitute(pattern_, binding);
}

std::optional<Binding> Schema::match(const Formula& f) const {
  Binding b;
  if (!match_into(pattern_, f, b)) return std::nullopt;
  return b;
}

Formula instantiate(const Schema& s, const Binding& binding) { return s.instantiate(binding); }

std::string_view axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::K: return "K**";
    case AxiomId::KInv: return "K'**";
    case AxiomId::T: return "T**";
    case AxiomId::Four: return "4**";
    case AxiomId::S: return "S**";
    case AxiomId::H: return "H**";
    case AxiomId::LP: return "LP";
  }
  return "?";
}

std::optional<AxiomId> axiom_from_name(std::string_view name) {
  for (AxiomId id : all_axioms()) {
    if (axiom_name(id) == name) return id;
  }
  return std::nullopt;
}

const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> ids = {AxiomId::K, AxiomId::KInv, AxiomId::T, AxiomId::Four,
                                           AxiomId::S, AxiomId::H,    AxiomId::LP};
  return ids;
}

const Schema& axiom_schema(AxiomId id) {
  static const std::array<Schema, 7> schemata = {
      Schema::parse("[](?A -> ?B) -> ([]?A -> []?B)"),
      Schema::parse("[i](?A -> ?B) -> ([i]?A -> [i]?B)"),
      Schema::parse("[]?A -> ?A"),
      Schema::parse("[]?A -> [][]?A"),
      Schema::parse("?A -> [i]<>?A"),
      Schema::parse("<*>([]?A & [i]?B) -> [*](?A | ?B)"),
      // Side condition (?A propositional and satisfiable) is checked by the
      // calculus, not by the pattern.
      Schema::parse("<*>?A"),
  };
  return schemata[static_cast<std::size_t>(id)];
}

}  // namespace colog
