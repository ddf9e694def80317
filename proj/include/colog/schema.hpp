#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "colog/formula.hpp"

namespace colog {

// Metavariable name (without the leading '?') to its replacement.
using Binding = std::map<std::string, Formula>;

// A formula whose `?X` leaves stand for arbitrary formulas.
class Schema {
 public:
  // Parses a pattern such as "[]?A -> ?A".
  static Schema parse(std::string_view pattern);

  const Formula& pattern() const { return pattern_; }
  // Metavariable names without the '?' prefix.
  const std::set<std::string>& metavariables() const { return metavars_; }

  // Uniform substitution. Throws InputError if a metavariable is unbound.
  Formula instantiate(const Binding& binding) const;

  // One-way matching of `f` against the pattern.
  std::optional<Binding> match(const Formula& f) const;

 private:
  explicit Schema(Formula pattern);

  Formula pattern_;
  std::set<std::string> metavars_;
};

Formula instantiate(const Schema& s, const Binding& binding);

enum class AxiomId { K, KInv, T, Four, S, H, LP };

// "K**", "K'**", "T**", "4**", "S**", "H**", "LP".
std::string_view axiom_name(AxiomId id);
std::optional<AxiomId> axiom_from_name(std::string_view name);

// Axiom schemata in matching order K**, K'**, T**, 4**, S**, H**, LP.
const std::vector<AxiomId>& all_axioms();
const Schema& axiom_schema(AxiomId id);

}  // namespace colog
