#include "colog/epsilon.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>

#include "colog/errors.hpp"

namespace colog {

namespace {

using Names = std::vector<std::string>;

bool truth(const Formula& f, const Names& names, std::uint32_t bits) {
  switch (f.kind()) {
    case Kind::Atom: {
      const auto i = static_cast<std::size_t>(std::find(names.begin(), names.end(), f.name()) - names.begin());
      return ((bits >> i) & 1u) != 0;
    }
    case Kind::Truth: return true;
    case Kind::Falsity: return false;
    case Kind::Not: return !truth(f.arg(), names, bits);
    case Kind::And: return truth(f.lhs(), names, bits) && truth(f.rhs(), names, bits);
    case Kind::Or: return truth(f.lhs(), names, bits) || truth(f.rhs(), names, bits);
    case Kind::Implies: return !truth(f.lhs(), names, bits) || truth(f.rhs(), names, bits);
    case Kind::Iff: return truth(f.lhs(), names, bits) == truth(f.rhs(), names, bits);
    default: throw InputError("epsilon semantics needs propositional rules, found " + render(f));
  }
}

Names names_of(const ConditionalRule& r, const std::vector<ConditionalRule>& others) {
  std::set<std::string> all = atoms(r.formula());
  for (const auto& o : others) all.merge(atoms(o.formula()));
  return {all.begin(), all.end()};
}

}  // namespace

Formula material(const ConditionalRule& r) { return implies(r.antecedent(), r.consequent()); }

bool tolerated(const ConditionalRule& r, const std::vector<ConditionalRule>& others) {
  const Names names = names_of(r, others);
  if (names.size() > 20) throw BoundsError("tolerance check over more than 20 atoms");
  const Formula verified = conj(r.antecedent(), r.consequent());
  for (std::uint32_t bits = 0; bits < (1u << names.size()); ++bits) {
    if (!truth(verified, names, bits)) continue;
    if (std::all_of(others.begin(), others.end(),
                    [&](const ConditionalRule& o) { return truth(material(o), names, bits); })) {
      return true;
    }
  }
  return false;
}

std::optional<TolerancePartition> epsilon_consistent(const std::vector<ConditionalRule>& rules) {
  TolerancePartition out;
  std::vector<ConditionalRule> rest = rules;
  while (!rest.empty()) {
    std::vector<ConditionalRule> layer, kept;
    for (const auto& r : rest) (tolerated(r, rest) ? layer : kept).push_back(r);
    if (layer.empty()) return std::nullopt;
    out.push_back(std::move(layer));
    rest = std::move(kept);
  }
  return out;
}

bool epsilon_entails(const std::vector<ConditionalRule>& rules, const ConditionalRule& query) {
  if (!epsilon_consistent(rules)) return true;
  std::vector<ConditionalRule> extended = rules;
  extended.emplace_back(query.antecedent(), neg(query.consequent()));
  return !epsilon_consistent(extended);
}

CrosscheckRow crosscheck(const ConditionalKB& kb, const ConditionalRule& query, const QueryOptions& opts) {
  CrosscheckRow row;
  row.query = query.text();
  QueryOptions co = opts, co_star = opts;
  co.model_class = ModelClass::CO;
  co_star.model_class = ModelClass::COStar;
  row.co = kb_entails_conditional(kb, query, co).holds();
  Verdict star = kb_entails_conditional(kb, query, co_star);
  row.co_star = star.holds();
  if (!star.holds()) row.co_star_countermodel = star.witness->model;
  row.epsilon = epsilon_entails(kb.rules(), query);
  row.theory_consistent = epsilon_consistent(kb.rules()).has_value();
  if (!row.theory_consistent) {
    std::vector<Formula> fs = {query.formula()};
    for (const auto& r : kb.rules()) fs.push_back(r.formula());
    const Vocabulary vocab = vocabulary_of(fs);
    row.co_models = kb_model(kb, vocab, co).has_value();
    row.co_star_models = kb_model(kb, vocab, co_star).has_value();
  }
  return row;
}

std::vector<ConditionalRule> literal_battery(const Vocabulary& three_atoms) {
  if (three_atoms.size() != 3) throw InputError("the literal battery needs exactly three atoms");
  std::vector<ConditionalRule> out;
  auto lit = [](const std::string& name, bool positive) { return positive ? atom(name) : neg(atom(name)); };
  for (std::size_t z = 0; z < 3; ++z) {
    const std::string& x = three_atoms[z == 0 ? 1 : 0];
    const std::string& y = three_atoms[z == 2 ? 1 : 2];
    for (int signs = 0; signs < 8; ++signs) {
      out.emplace_back(conj(lit(x, !(signs & 4)), lit(y, !(signs & 2))), lit(three_atoms[z], !(signs & 1)));
    }
  }
  return out;
}

std::vector<CrosscheckInstance> random_instances(std::size_t count, std::uint32_t seed, const Vocabulary& vocab,
                                                 std::size_t max_rules) {
  if (vocab.empty() || max_rules == 0) throw InputError("random instances need atoms and at least one rule");
  std::mt19937 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto literal = [&] {
    Formula a = atom(vocab[pick(vocab.size())]);
    return pick(2) ? a : neg(a);
  };
  auto side = [&] {
    const std::size_t shape = pick(4);
    if (shape >= 2) return literal();
    Formula a = literal();
    Formula b = literal();
    return shape == 0 ? conj(a, b) : disj(a, b);
  };
  auto random_rule = [&] {
    for (;;) {
      Formula a = side();
      if (!satisfiable(a, vocab)) continue;
      Formula b = side();
      return ConditionalRule(std::move(a), std::move(b));
    }
  };
  std::vector<CrosscheckInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<ConditionalRule> rules;
    const std::size_t n = 1 + pick(max_rules);
    for (std::size_t k = 0; k < n; ++k) rules.push_back(random_rule());
    ConditionalRule q = random_rule();
    out.push_back({ConditionalKB(std::move(rules)), std::move(q)});
  }
  return out;
}

std::string format_crosscheck(const std::vector<CrosscheckRow>& rows) {
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.query.size());
  auto yn = [](bool b) { return b ? "yes" : "no "; };
  std::ostringstream out;
  out << "query" << std::string(width - 5, ' ') << "  CO   CO*  eps  agree\n";
  for (const auto& r : rows) {
    out << r.query << std::string(width - r.query.size(), ' ') << "  " << yn(r.co) << "  " << yn(r.co_star)
        << "  " << yn(r.epsilon) << "  " << (r.agree() ? "yes" : "NO");
    if (r.co_diverges()) out << "  (CO diverges)";
    if (!r.theory_consistent) {
      out << "  (theory eps-inconsistent; CO models: " << (r.co_models ? "some" : "none")
          << ", CO* models: " << (r.co_star_models ? "some" : "none") << ")";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace colog
