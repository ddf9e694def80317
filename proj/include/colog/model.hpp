#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colog/valuation.hpp"

namespace colog {

// Plausibility rank of a world. 0 is maximally plausible (R-minimal).
using Rank = std::uint32_t;

// Returned by min_rank for sentences no world satisfies. Worlds never carry it.
inline constexpr Rank kInfiniteRank = std::numeric_limits<Rank>::max();

struct World {
  Valuation valuation;
  Rank rank = 0;

  bool operator==(const World&) const = default;
};

// Finite CO-model as a ranked set of worlds. Accessibility is derived:
// w R v iff rank(v) <= rank(w), i.e. v is at least as plausible as w.
//
// Invariants: at least one world, the ranks used are exactly 0..max_rank(),
// every valuation fits the vocabulary.
class RankedModel {
 public:
  RankedModel(Vocabulary vocabulary, std::vector<World> worlds);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  std::span<const World> worlds() const { return worlds_; }
  std::size_t size() const { return worlds_.size(); }
  const World& world(std::size_t i) const { return worlds_.at(i); }
  Rank rank(std::size_t i) const { return worlds_[i].rank; }
  Rank max_rank() const { return max_rank_; }

  bool accessible(std::size_t from, std::size_t to) const { return rank(to) <= rank(from); }

  // Lowest rank carried by each valuation, kInfiniteRank when absent.
  // Indexed by Valuation::bits.
  std::vector<Rank> valuation_ranks() const;

  // Every valuation over the vocabulary occurs as some world.
  bool is_co_star() const;

  bool operator==(const RankedModel&) const = default;

 private:
  Vocabulary vocabulary_;
  std::vector<World> worlds_;
  Rank max_rank_ = 0;
};

bool is_co_star(const RankedModel& m);

// Same vocabulary and the same worlds, in any order.
bool same_worlds(const RankedModel& a, const RankedModel& b);

// Text format:
//   atoms: A B C
//   rank 0: 111 101
//   rank 1: 110 100
// One line per rank in increasing order, worlds in model order.
std::string to_text(const RankedModel& m);

// Parses the text format. Blank lines and lines starting with '#' are
// skipped. Throws ParseError whose line() is the 1-based offending line.
RankedModel parse_model(std::string_view text);

}  // namespace colog
