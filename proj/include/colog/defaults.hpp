#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colog/enumerate.hpp"
#include "colog/formula.hpp"
#include "colog/model.hpp"
#include "colog/search.hpp"
#include "colog/valuation.hpp"

namespace colog {

// A default `antecedent => consequent` between propositional sentences.
class ConditionalRule {
 public:
  // Throws InputError unless both sides are propositional and the
  // antecedent is satisfiable.
  ConditionalRule(Formula antecedent, Formula consequent);
  // Parses "alpha => beta".
  static ConditionalRule parse(std::string_view text);

  const Formula& antecedent() const { return antecedent_; }
  const Formula& consequent() const { return consequent_; }
  Formula formula() const { return cond(antecedent_, consequent_); }
  std::string text() const { return render(formula()); }

 private:
  Formula antecedent_;
  Formula consequent_;
};

class ConditionalKB {
 public:
  ConditionalKB() = default;
  explicit ConditionalKB(std::vector<ConditionalRule> rules);

  // One rule per line; blank lines and '#' comments are skipped. Throws
  // ParseError carrying the line number.
  static ConditionalKB parse(std::string_view text);

  const std::vector<ConditionalRule>& rules() const { return rules_; }
  // Sorted atoms of all rules.
  const Vocabulary& vocabulary() const { return vocabulary_; }

 private:
  std::vector<ConditionalRule> rules_;
  Vocabulary vocabulary_;
};

// Truth of the defining modal formula of a => b (the same at every world).
bool conditional_holds(const RankedModel& m, const Formula& a, const Formula& b);
// min_rank(a & b) < min_rank(a & ~b), or a is impossible.
bool conditional_holds_by_rank(const RankedModel& m, const Formula& a, const Formula& b);

bool believes(const RankedModel& m, const Formula& f);
// M |= O(kb) for propositional kb. Cross-checked against the rank-0 reading
// (no kb-world, or the kb-worlds are exactly the rank-0 worlds).
bool only_knows(const RankedModel& m, const Formula& kb);

struct QueryOptions {
  ModelClass model_class = ModelClass::COStar;
  std::size_t multiplicity = 1;
  bool allow_beyond_ceiling = false;
  // Evaluate every conditional through the modal evaluator instead of
  // per-valuation best ranks.
  bool modal_route = false;
};

SearchBounds query_bounds(std::size_t atom_count, const QueryOptions& opts);

// Every enumerated model of the class in which all rules of `kb` hold
// satisfies `query`. Countermodels are re-verified with the modal evaluator.
Verdict kb_entails_conditional(const ConditionalKB& kb, const ConditionalRule& query,
                               const QueryOptions& opts = {});

// `a` strictly more plausible than `b` in every model of `kb`.
Verdict kb_entails_plausibility(const ConditionalKB& kb, const Formula& a, const Formula& b,
                                const QueryOptions& opts = {});

// First enumerated model of the class over `vocab` (which must cover the KB)
// in which every rule holds.
std::optional<RankedModel> kb_model(const ConditionalKB& kb, const Vocabulary& vocab,
                                    const QueryOptions& opts = {});

}  // namespace colog
