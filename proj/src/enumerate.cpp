#include "colog/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "colog/errors.hpp"

namespace colog {

std::string_view model_class_name(ModelClass c) { return c == ModelClass::COStar ? "CO*" : "CO"; }

std::size_t atom_ceiling(const SearchBounds& b) {
  if (b.allow_beyond_ceiling) return kHardAtomLimit;
  return b.max_multiplicity <= 1 ? 3 : 2;
}

void check_bounds(std::size_t atom_count, const SearchBounds& b) {
  if (b.max_atoms < 1) throw BoundsError("max_atoms must be at least 1");
  if (b.max_multiplicity < 1) throw BoundsError("max_multiplicity must be at least 1");
  if (b.max_multiplicity > 4) throw BoundsError("max_multiplicity above 4 is not supported");
  if (atom_count > b.max_atoms) {
    throw BoundsError("query uses " + std::to_string(atom_count) + " atoms, bound is " +
                      std::to_string(b.max_atoms));
  }
  if (atom_count > atom_ceiling(b)) {
    throw BoundsError(std::to_string(atom_count) + " atoms exceeds the enumeration ceiling of " +
                      std::to_string(atom_ceiling(b)) +
                      (b.allow_beyond_ceiling ? "" : " (pass the beyond-ceiling acknowledgment to lift it)"));
  }
}

void Ranking::best_ranks(std::span<Rank> out) const {
  std::fill(out.begin(), out.end(), kInfiniteRank);
  for (std::size_t i = 0; i < valuations.size(); ++i) {
    out[valuations[i]] = static_cast<Rank>(std::countr_zero(level_masks[i]));
  }
}

RankedModel to_model(const Vocabulary& vocab, const Ranking& r) {
  std::vector<World> worlds;
  for (std::size_t i = 0; i < r.valuations.size(); ++i) {
    for (std::uint32_t m = r.level_masks[i]; m != 0; m &= m - 1) {
      worlds.push_back(World{Valuation{r.valuations[i]}, static_cast<Rank>(std::countr_zero(m))});
    }
  }
  std::sort(worlds.begin(), worlds.end(), [](const World& a, const World& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.valuation < b.valuation;
  });
  return RankedModel(vocab, std::move(worlds));
}

namespace {

// Assigns level sets to a fixed list of valuations for a fixed level count.
class LevelAssigner {
 public:
  LevelAssigner(const std::vector<std::uint32_t>& items, std::size_t levels, std::size_t multiplicity,
                std::size_t atom_count, const std::function<bool(const Ranking&)>& visit)
      : items_(items),
        levels_(levels),
        multiplicity_(multiplicity),
        all_levels_(levels >= 32 ? ~0u : (1u << levels) - 1),
        masks_(items.size(), 0),
        visit_(visit) {
    add_level_sets(0, 0, 0);
    std::sort(allowed_.begin(), allowed_.end());
    ranking_.atom_count = atom_count;
    ranking_.levels = levels;
    ranking_.valuations = items_;
    ranking_.level_masks = masks_;
  }

  // Returns false when the visitor asked to stop.
  bool run(std::size_t& visited) { return assign(0, 0, visited); }

 private:
  bool assign(std::size_t i, std::uint32_t covered, std::size_t& visited) {
    if (i == items_.size()) {
      if (covered != all_levels_) return true;
      ++visited;
      return visit_(ranking_);
    }
    const std::size_t remaining = items_.size() - i - 1;
    for (std::uint32_t m : allowed_) {
      const std::uint32_t next = covered | m;
      const auto missing = static_cast<std::size_t>(std::popcount(all_levels_ & ~next));
      if (missing > remaining * multiplicity_) continue;
      masks_[i] = m;
      if (!assign(i + 1, next, visited)) return false;
    }
    return true;
  }

  // Every nonempty subset of the levels with at most multiplicity_ members.
  void add_level_sets(std::size_t from, std::uint32_t mask, std::size_t size) {
    if (size > 0) allowed_.push_back(mask);
    if (size == multiplicity_) return;
    for (std::size_t l = from; l < levels_; ++l) add_level_sets(l + 1, mask | (1u << l), size + 1);
  }

  const std::vector<std::uint32_t>& items_;
  std::size_t levels_;
  std::size_t multiplicity_;
  std::uint32_t all_levels_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::uint32_t> allowed_;
  Ranking ranking_;
  const std::function<bool(const Ranking&)>& visit_;
};

}  // namespace

ModelEnumerator::ModelEnumerator(Vocabulary vocabulary, SearchBounds bounds)
    : vocabulary_(std::move(vocabulary)), bounds_(bounds) {
  check_bounds(vocabulary_.size(), bounds_);
}

std::size_t ModelEnumerator::for_each_ranking(const std::function<bool(const Ranking&)>& visit) const {
  const std::size_t n = vocabulary_.size();
  const std::uint64_t valuation_count = std::uint64_t{1} << n;
  const std::uint64_t full = valuation_count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << valuation_count) - 1;
  const std::size_t m = bounds_.max_multiplicity;
  std::size_t visited = 0;
  std::vector<std::uint32_t> items;
  const std::uint64_t first = bounds_.require_all_valuations ? full : 1;
  for (std::uint64_t subset = first; subset <= full && subset != 0; ++subset) {
    items.clear();
    for (std::uint32_t v = 0; v < valuation_count; ++v) {
      if ((subset >> v) & 1u) items.push_back(v);
    }
    for (std::size_t k = 1; k <= items.size() * m && k <= 32; ++k) {
      LevelAssigner assigner(items, k, m, n, visit);
      if (!assigner.run(visited)) return visited;
    }
    if (subset == full) break;
  }
  return visited;
}

std::size_t ModelEnumerator::for_each(const std::function<bool(const RankedModel&)>& visit) const {
  return for_each_ranking([&](const Ranking& r) { return visit(to_model(vocabulary_, r)); });
}

std::vector<RankedModel> ModelEnumerator::all() const {
  std::vector<RankedModel> out;
  for_each([&](const RankedModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::size_t ModelEnumerator::count() const {
  return for_each_ranking([](const Ranking&) { return true; });
}

std::vector<RankedModel> enumerate_models(const Vocabulary& vocab, const SearchBounds& bounds) {
  return ModelEnumerator(vocab, bounds).all();
}

}  // namespace colog
