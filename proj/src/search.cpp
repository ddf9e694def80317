#include "colog/search.hpp"

#include <algorithm>

#include "colog/evaluate.hpp"

namespace colog {

std::string_view status_name(Verdict::Status s) {
  return s == Verdict::Status::ValidWithinBounds ? "valid-within-bounds" : "countermodel";
}

Verdict find_countermodel(const std::vector<Formula>& premises, const Formula& goal,
                          const SearchBounds& bounds, Consequence mode) {
  std::vector<Formula> all = premises;
  all.push_back(goal);
  ModelEnumerator models(vocabulary_of(all), bounds);

  std::optional<Witness> found;
  const std::size_t checked = models.for_each([&](const RankedModel& m) {
    Evaluator eval(m);
    std::vector<WorldSet> prem;
    prem.reserve(premises.size());
    for (const Formula& p : premises) prem.push_back(eval.truth(p));
    const WorldSet g = eval.truth(goal);

    auto premises_at = [&](std::size_t w) {
      return std::all_of(prem.begin(), prem.end(), [&](const WorldSet& s) { return s[w] != 0; });
    };
    if (mode == Consequence::Global) {
      for (std::size_t w = 0; w < m.size(); ++w) {
        if (!premises_at(w)) return true;
      }
    }
    for (std::size_t w = 0; w < m.size(); ++w) {
      if (!g[w] && (mode == Consequence::Global || premises_at(w))) {
        found = Witness{m, w};
        return false;
      }
    }
    return true;
  });
  if (found) return Verdict::refuted(std::move(*found), checked);
  return Verdict::valid(checked);
}

}  // namespace colog
