#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colog/formula.hpp"
#include "colog/schema.hpp"

namespace colog {

struct AxiomMatch {
  AxiomId id;
  Binding binding;
};

// First schema (K**, K'**, T**, 4**, S**, H**, LP) of which `f` is a
// structural instance. LP matches only when its body is propositional and
// satisfiable.
std::optional<AxiomMatch> match_axiom(const Formula& f);

// True iff `f` is a substitution instance of a classical tautology: maximal
// non-boolean subformulas (after desugaring) are read as atoms.
bool check_tautology(const Formula& f);

struct Justification {
  enum class Rule { Axiom, Tautology, Premise, ModusPonens, Necessitation };

  Rule rule = Rule::Premise;
  AxiomId axiom = AxiomId::K;
  std::optional<Binding> binding;
  // 1-based line references. For modus ponens `first` cites the implication
  // and `second` its antecedent.
  std::size_t first = 0;
  std::size_t second = 0;

  static Justification by_axiom(AxiomId id, std::optional<Binding> b = std::nullopt) {
    return {Rule::Axiom, id, std::move(b), 0, 0};
  }
  static Justification tautology() { return {Rule::Tautology, AxiomId::K, std::nullopt, 0, 0}; }
  static Justification premise() { return {Rule::Premise, AxiomId::K, std::nullopt, 0, 0}; }
  static Justification mp(std::size_t implication, std::size_t antecedent) {
    return {Rule::ModusPonens, AxiomId::K, std::nullopt, implication, antecedent};
  }
  static Justification nec(std::size_t line) {
    return {Rule::Necessitation, AxiomId::K, std::nullopt, line, 0};
  }
};

struct ProofLine {
  Formula formula;
  Justification justification;
};

struct ProofCheck {
  bool ok = true;
  std::size_t failed_line = 0;  // 1-based; 0 when ok
  std::string message;
};

// Checks each line in order. Formulas are compared modulo desugaring.
// Necessitation is refused on lines that depend on a premise.
ProofCheck verify_proof(const std::vector<Formula>& premises, const std::vector<ProofLine>& lines);

// Reads `N. <formula> ; <justification>` lines, where the justification is
// one of `ax:K**{A=...,B=...}` (binding optional), `taut`, `prem`, `mp N M`,
// `nec N`. Blank lines and `#` comments are skipped. Throws ParseError with
// the offending line number.
std::vector<ProofLine> parse_proof(std::string_view text);

std::string to_text(const ProofLine& line, std::size_t number);

}  // namespace colog
