#include "colog/defaults.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "colog/errors.hpp"
#include "colog/evaluate.hpp"
#include "colog/orderings.hpp"
#include "colog/parser.hpp"

namespace colog {

namespace {

Vocabulary own_atoms(const Formula& f) {
  const auto names = atoms(f);
  return {names.begin(), names.end()};
}

Vocabulary merged(const Vocabulary& a, const std::vector<Formula>& extra) {
  std::vector<Formula> fs = extra;
  for (const auto& name : a) fs.push_back(atom(name));
  return vocabulary_of(fs);
}

// Truth sets of a & b and a & ~b over a fixed vocabulary.
struct CompiledRule {
  std::uint64_t verified = 0;
  std::uint64_t falsified = 0;
};

CompiledRule compile(const Formula& a, const Formula& b, const Vocabulary& vocab) {
  const TruthSet ta = TruthSet::of(a, vocab);
  const TruthSet tb = TruthSet::of(b, vocab);
  return {(ta & tb).mask(), (ta & tb.complement()).mask()};
}

Rank best_of(std::uint64_t mask, std::span<const Rank> best) {
  Rank r = kInfiniteRank;
  for (std::size_t v = 0; v < best.size(); ++v) {
    if ((mask >> v) & 1u) r = std::min(r, best[v]);
  }
  return r;
}

bool rule_holds(const CompiledRule& r, std::span<const Rank> best) {
  const Rank yes = best_of(r.verified, best);
  const Rank no = best_of(r.falsified, best);
  return yes < no || (yes == kInfiniteRank && no == kInfiniteRank);
}

bool kb_holds_modally(const RankedModel& m, const ConditionalKB& kb) {
  return std::all_of(kb.rules().begin(), kb.rules().end(), [&](const ConditionalRule& r) {
    return conditional_holds(m, r.antecedent(), r.consequent());
  });
}

// Sweeps the bounded class for a model of `kb` on which `fails_fast` (best
// ranks) or `fails_modal` (model) reports the query false. The modal test
// re-verifies every countermodel found by the fast route.
Verdict sweep(const ConditionalKB& kb, const Vocabulary& vocab, const QueryOptions& opts,
              const std::function<bool(std::span<const Rank>)>& fails_fast,
              const std::function<bool(const RankedModel&)>& fails_modal) {
  const ModelEnumerator models(vocab, query_bounds(vocab.size(), opts));
  std::optional<Witness> found;
  std::size_t checked = 0;
  if (opts.modal_route) {
    checked = models.for_each([&](const RankedModel& m) {
      if (!kb_holds_modally(m, kb) || !fails_modal(m)) return true;
      found = Witness{m, 0};
      return false;
    });
  } else {
    std::vector<CompiledRule> rules;
    for (const auto& r : kb.rules()) rules.push_back(compile(r.antecedent(), r.consequent(), vocab));
    std::vector<Rank> best(std::size_t{1} << vocab.size());
    checked = models.for_each_ranking([&](const Ranking& ranking) {
      ranking.best_ranks(best);
      for (const auto& r : rules) {
        if (!rule_holds(r, best)) return true;
      }
      if (!fails_fast(best)) return true;
      RankedModel m = to_model(vocab, ranking);
      if (!kb_holds_modally(m, kb) || !fails_modal(m)) {
        throw std::logic_error("countermodel failed modal re-verification:\n" + to_text(m));
      }
      found = Witness{std::move(m), 0};
      return false;
    });
  }
  if (found) return Verdict::refuted(std::move(*found), checked);
  return Verdict::valid(checked);
}

void require_propositional(const Formula& f, const char* what) {
  if (!is_propositional(f)) throw InputError(std::string(what) + " must be propositional: " + render(f));
}

}  // namespace

ConditionalRule::ConditionalRule(Formula antecedent, Formula consequent)
    : antecedent_(std::move(antecedent)), consequent_(std::move(consequent)) {
  require_propositional(antecedent_, "antecedent");
  require_propositional(consequent_, "consequent");
  if (!satisfiable(antecedent_, own_atoms(antecedent_))) {
    throw InputError("unsatisfiable antecedent in " + text());
  }
}

ConditionalRule ConditionalRule::parse(std::string_view text) {
  const Formula f = colog::parse(text);
  if (f.kind() != Kind::Cond) throw InputError("expected a rule 'alpha => beta', found " + render(f));
  return ConditionalRule(f.lhs(), f.rhs());
}

ConditionalKB::ConditionalKB(std::vector<ConditionalRule> rules) : rules_(std::move(rules)) {
  std::vector<Formula> fs;
  for (const auto& r : rules_) fs.push_back(r.formula());
  vocabulary_ = vocabulary_of(fs);
}

ConditionalKB ConditionalKB::parse(std::string_view text) {
  std::vector<ConditionalRule> rules;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      rules.push_back(ConditionalRule::parse(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position(), lineno);
    } catch (const InputError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), first, lineno);
    }
  }
  return ConditionalKB(std::move(rules));
}

bool conditional_holds(const RankedModel& m, const Formula& a, const Formula& b) {
  require_propositional(a, "antecedent");
  require_propositional(b, "consequent");
  return holds_globally(m, desugar(cond(a, b)));
}

bool conditional_holds_by_rank(const RankedModel& m, const Formula& a, const Formula& b) {
  const Rank yes = min_rank(m, conj(a, b));
  const Rank no = min_rank(m, conj(a, neg(b)));
  return yes < no || min_rank(m, a) == kInfiniteRank;
}

bool believes(const RankedModel& m, const Formula& f) { return holds_globally(m, desugar(belief(f))); }

bool only_knows(const RankedModel& m, const Formula& kb) {
  require_propositional(kb, "knowledge base");
  const bool modal = holds_globally(m, desugar(onlyknow(kb)));
  const WorldSet t = Evaluator(m).truth(kb);
  bool any = false, exact = true;
  for (std::size_t w = 0; w < m.size(); ++w) {
    any = any || t[w];
    exact = exact && ((t[w] != 0) == (m.rank(w) == 0));
  }
  if (modal != (!any || exact)) throw std::logic_error("only-knowing disagrees with its rank-0 reading");
  return modal;
}

SearchBounds query_bounds(std::size_t atom_count, const QueryOptions& opts) {
  SearchBounds b = SearchBounds::of(opts.model_class, std::max<std::size_t>(atom_count, 1), opts.multiplicity);
  b.allow_beyond_ceiling = opts.allow_beyond_ceiling;
  return b;
}

Verdict kb_entails_conditional(const ConditionalKB& kb, const ConditionalRule& query,
                               const QueryOptions& opts) {
  const Vocabulary vocab = merged(kb.vocabulary(), {query.formula()});
  const CompiledRule q = compile(query.antecedent(), query.consequent(), vocab);
  return sweep(
      kb, vocab, opts, [&](std::span<const Rank> best) { return !rule_holds(q, best); },
      [&](const RankedModel& m) { return !conditional_holds(m, query.antecedent(), query.consequent()); });
}

Verdict kb_entails_plausibility(const ConditionalKB& kb, const Formula& a, const Formula& b,
                                const QueryOptions& opts) {
  require_propositional(a, "plausibility argument");
  require_propositional(b, "plausibility argument");
  const Vocabulary vocab = merged(kb.vocabulary(), {a, b});
  const std::uint64_t ta = TruthSet::of(a, vocab).mask();
  const std::uint64_t tb = TruthSet::of(b, vocab).mask();
  return sweep(
      kb, vocab, opts, [&](std::span<const Rank> best) { return !(best_of(ta, best) < best_of(tb, best)); },
      [&](const RankedModel& m) { return !(plausibility_leq(m, a, b) && !plausibility_leq(m, b, a)); });
}

std::optional<RankedModel> kb_model(const ConditionalKB& kb, const Vocabulary& vocab, const QueryOptions& opts) {
  for (const auto& name : kb.vocabulary()) atom_index(vocab, name);
  const Verdict v = sweep(
      kb, vocab, opts, [](std::span<const Rank>) { return true; }, [](const RankedModel&) { return true; });
  if (v.holds()) return std::nullopt;
  return v.witness->model;
}

}  // namespace colog
