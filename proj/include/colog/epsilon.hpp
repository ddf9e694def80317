#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colog/defaults.hpp"
#include "colog/formula.hpp"
#include "colog/search.hpp"

namespace colog {

// Tolerance-based epsilon semantics for finite conditional theories. The
// propositional checks here use their own evaluator and never touch ranked
// models, so the oracle stays independent of the model-theoretic engine.

// Rule sets T0, T1, ...: each rule of Ti is tolerated by Ti u Ti+1 u ...
using TolerancePartition = std::vector<std::vector<ConditionalRule>>;

// antecedent -> consequent.
Formula material(const ConditionalRule& r);

// Some valuation satisfies r's antecedent and consequent and the material
// counterpart of every rule in `others`.
bool tolerated(const ConditionalRule& r, const std::vector<ConditionalRule>& others);

// Greedy peeling: repeatedly removes every rule tolerated by the remaining
// ones. Empty optional when some round tolerates nothing.
std::optional<TolerancePartition> epsilon_consistent(const std::vector<ConditionalRule>& rules);

// T entails a => b iff T u {a => ~b} is inconsistent; an inconsistent T
// entails everything.
bool epsilon_entails(const std::vector<ConditionalRule>& rules, const ConditionalRule& query);

struct CrosscheckRow {
  std::string query;
  bool co = false;
  bool co_star = false;
  bool epsilon = false;
  bool theory_consistent = true;
  // Whether the theory has any CO / CO* model within bounds.
  bool co_models = true;
  bool co_star_models = true;
  std::optional<RankedModel> co_star_countermodel;

  bool agree() const { return co_star == epsilon; }
  bool co_diverges() const { return co != epsilon; }
};

CrosscheckRow crosscheck(const ConditionalKB& kb, const ConditionalRule& query, const QueryOptions& opts = {});

// Queries `[~]X & [~]Y => [~]Z` for every ordered choice of Z and the other
// two atoms X < Y of a three-atom vocabulary (24 queries).
std::vector<ConditionalRule> literal_battery(const Vocabulary& three_atoms);

struct CrosscheckInstance {
  ConditionalKB kb;
  ConditionalRule query;
};

// Random theories of 1..max_rules rules plus a query, over `vocab`. Sides
// are literals or binary conjunctions/disjunctions of literals; antecedents
// are resampled until satisfiable. Deterministic for a given seed.
std::vector<CrosscheckInstance> random_instances(std::size_t count, std::uint32_t seed, const Vocabulary& vocab,
                                                 std::size_t max_rules = 4);

// Table with one row per query: query, CO, CO*, eps, agree.
std::string format_crosscheck(const std::vector<CrosscheckRow>& rows);

}  // namespace colog
