#pragma once

#include <vector>

#include "colog/formula.hpp"
#include "colog/model.hpp"

namespace colog {

// Truth value per world, indexed like RankedModel::worlds().
using WorldSet = std::vector<char>;

// Evaluates formulas over one model. Derived modalities are interpreted
// directly by their truth conditions (not via desugar), so the evaluator can
// be used to cross-check the rewriting.
class Evaluator {
 public:
  explicit Evaluator(const RankedModel& model);

  // Throws UnknownAtomError for atoms outside the model's vocabulary.
  WorldSet truth(const Formula& f) const;

  const RankedModel& model() const { return model_; }

 private:
  WorldSet box_like(const WorldSet& arg, bool inaccessible) const;
  WorldSet constant(bool value) const { return WorldSet(model_.size(), value ? 1 : 0); }
  Rank min_rank_of(const WorldSet& s) const;

  const RankedModel& model_;
  // World indices grouped by rank.
  std::vector<std::vector<std::size_t>> levels_;
};

bool evaluate(const RankedModel& m, std::size_t world, const Formula& f);

bool holds_globally(const RankedModel& m, const Formula& f);

// Least rank of a world satisfying the propositional formula p; kInfiniteRank
// when none does. Throws InputError when p has modal nodes.
Rank min_rank(const RankedModel& m, const Formula& p);

}  // namespace colog
