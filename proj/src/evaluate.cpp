#include "colog/evaluate.hpp"

#include <algorithm>

#include "colog/errors.hpp"

namespace colog {

Evaluator::Evaluator(const RankedModel& model) : model_(model), levels_(model.max_rank() + 1) {
  for (std::size_t i = 0; i < model.size(); ++i) levels_[model.rank(i)].push_back(i);
}

Rank Evaluator::min_rank_of(const WorldSet& s) const {
  for (Rank r = 0; r < levels_.size(); ++r) {
    for (std::size_t w : levels_[r]) {
      if (s[w]) return r;
    }
  }
  return kInfiniteRank;
}

// [] quantifies over worlds of rank <= rank(w), [i] over rank > rank(w).
WorldSet Evaluator::box_like(const WorldSet& arg, bool inaccessible) const {
  const std::size_t k = levels_.size();
  std::vector<char> level_ok(k, 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t w : levels_[r]) level_ok[r] = level_ok[r] && arg[w];
  }
  // ok_at[r]: the quantified range seen from rank r satisfies arg.
  std::vector<char> ok_at(k, 1);
  if (!inaccessible) {
    char acc = 1;
    for (std::size_t r = 0; r < k; ++r) ok_at[r] = acc = static_cast<char>(acc && level_ok[r]);
  } else {
    char acc = 1;
    for (std::size_t r = k; r-- > 0;) {
      ok_at[r] = acc;
      acc = static_cast<char>(acc && level_ok[r]);
    }
  }
  WorldSet out(model_.size());
  for (std::size_t w = 0; w < model_.size(); ++w) out[w] = ok_at[model_.rank(w)];
  return out;
}

WorldSet Evaluator::truth(const Formula& f) const {
  const std::size_t n = model_.size();
  auto map1 = [&](const WorldSet& a, auto op) {
    WorldSet out(n);
    for (std::size_t w = 0; w < n; ++w) out[w] = op(a[w] != 0) ? 1 : 0;
    return out;
  };
  auto map2 = [&](const WorldSet& a, const WorldSet& b, auto op) {
    WorldSet out(n);
    for (std::size_t w = 0; w < n; ++w) out[w] = op(a[w] != 0, b[w] != 0) ? 1 : 0;
    return out;
  };
  auto negate = [&](const WorldSet& a) { return map1(a, [](bool x) { return !x; }); };
  auto any = [](const WorldSet& a) { return std::any_of(a.begin(), a.end(), [](char c) { return c != 0; }); };
  auto all = [](const WorldSet& a) { return std::all_of(a.begin(), a.end(), [](char c) { return c != 0; }); };

  switch (f.kind()) {
    case Kind::Atom: {
      const std::size_t i = atom_index(model_.vocabulary(), f.name());
      WorldSet out(n);
      for (std::size_t w = 0; w < n; ++w) out[w] = model_.world(w).valuation[i] ? 1 : 0;
      return out;
    }
    case Kind::Truth: return constant(true);
    case Kind::Falsity: return constant(false);
    case Kind::Not: return negate(truth(f.arg()));
    case Kind::And: return map2(truth(f.lhs()), truth(f.rhs()), [](bool a, bool b) { return a && b; });
    case Kind::Or: return map2(truth(f.lhs()), truth(f.rhs()), [](bool a, bool b) { return a || b; });
    case Kind::Implies: return map2(truth(f.lhs()), truth(f.rhs()), [](bool a, bool b) { return !a || b; });
    case Kind::Iff: return map2(truth(f.lhs()), truth(f.rhs()), [](bool a, bool b) { return a == b; });
    case Kind::Box: return box_like(truth(f.arg()), false);
    case Kind::IBox: return box_like(truth(f.arg()), true);
    case Kind::Dia: return negate(box_like(negate(truth(f.arg())), false));
    case Kind::IDia: return negate(box_like(negate(truth(f.arg())), true));
    case Kind::AllBox: return constant(all(truth(f.arg())));
    case Kind::AllDia: return constant(any(truth(f.arg())));
    case Kind::Belief: {
      // Holds everywhere iff the argument holds at every rank-0 world.
      const WorldSet a = truth(f.arg());
      return constant(std::all_of(levels_[0].begin(), levels_[0].end(), [&](std::size_t w) { return a[w] != 0; }));
    }
    case Kind::OnlyKnow: {
      // The argument's worlds are exactly the rank-0 worlds, or there are none.
      const WorldSet a = truth(f.arg());
      bool exact = true;
      for (std::size_t w = 0; w < n; ++w) exact = exact && ((a[w] != 0) == (model_.rank(w) == 0));
      return constant(!any(a) || exact);
    }
    case Kind::Cond: {
      // Antecedent impossible, or its best worlds all satisfy the consequent.
      const WorldSet a = truth(f.lhs());
      const WorldSet b = truth(f.rhs());
      const Rank verified = min_rank_of(map2(a, b, [](bool x, bool y) { return x && y; }));
      const Rank falsified = min_rank_of(map2(a, b, [](bool x, bool y) { return x && !y; }));
      return constant(!any(a) || verified < falsified);
    }
  }
  throw InputError("unhandled formula kind");
}

bool evaluate(const RankedModel& m, std::size_t world, const Formula& f) {
  if (world >= m.size()) throw InputError("world index " + std::to_string(world) + " out of range");
  return Evaluator(m).truth(f)[world] != 0;
}

bool holds_globally(const RankedModel& m, const Formula& f) {
  const WorldSet s = Evaluator(m).truth(f);
  return std::all_of(s.begin(), s.end(), [](char c) { return c != 0; });
}

Rank min_rank(const RankedModel& m, const Formula& p) {
  if (!is_propositional(p)) {
    throw InputError("min_rank needs a propositional formula, got '" + render(p) + "'");
  }
  const WorldSet s = Evaluator(m).truth(p);
  Rank best = kInfiniteRank;
  for (std::size_t w = 0; w < m.size(); ++w) {
    if (s[w]) best = std::min(best, m.rank(w));
  }
  return best;
}

}  // namespace colog
