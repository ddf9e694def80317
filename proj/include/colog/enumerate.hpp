#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "colog/model.hpp"

namespace colog {

enum class ModelClass { CO, COStar };

std::string_view model_class_name(ModelClass c);  // "CO" / "CO*"

// Finite search envelope for model enumeration.
struct SearchBounds {
  std::size_t max_atoms = 2;
  // Most copies of one valuation (each copy on a distinct rank).
  std::size_t max_multiplicity = 1;
  // CO*: every valuation must occur.
  bool require_all_valuations = false;
  // Lift the default ceilings (up to kHardAtomLimit).
  bool allow_beyond_ceiling = false;

  static SearchBounds co(std::size_t atoms, std::size_t multiplicity = 1) {
    return {atoms, multiplicity, false, false};
  }
  static SearchBounds co_star(std::size_t atoms, std::size_t multiplicity = 1) {
    return {atoms, multiplicity, true, false};
  }
  static SearchBounds of(ModelClass c, std::size_t atoms, std::size_t multiplicity = 1) {
    return c == ModelClass::COStar ? co_star(atoms, multiplicity) : co(atoms, multiplicity);
  }
};

inline constexpr std::size_t kHardAtomLimit = 5;

// Default atom ceiling: 3 with multiplicity 1, 2 otherwise.
std::size_t atom_ceiling(const SearchBounds& b);

// Throws BoundsError when `atom_count` atoms cannot be searched under `b`.
void check_bounds(std::size_t atom_count, const SearchBounds& b);

// A ranking as produced by the enumerator, before it is materialized into a
// RankedModel. valuations[i] occupies every level set in level_masks[i].
struct Ranking {
  std::size_t atom_count = 0;
  std::size_t levels = 0;
  std::span<const std::uint32_t> valuations;
  std::span<const std::uint32_t> level_masks;

  // Fills out[v] with the lowest level of valuation v, kInfiniteRank when
  // absent. `out` must hold 2^atom_count entries.
  void best_ranks(std::span<Rank> out) const;
};

RankedModel to_model(const Vocabulary& vocab, const Ranking& r);

// Deterministic exhaustive enumeration of ranked models over a vocabulary.
//
// Order: subsets of valuations in binary-counter order (CO* uses only the
// full set); for each subset, the number of levels k ascending; then each
// valuation's level set, compared lexicographically over valuations in
// ascending order with level sets ordered by their bitmask. With
// multiplicity 1 this lists every ordered set partition of every subset
// exactly once.
class ModelEnumerator {
 public:
  ModelEnumerator(Vocabulary vocabulary, SearchBounds bounds);

  // Visits rankings until `visit` returns false. Returns the number visited.
  std::size_t for_each_ranking(const std::function<bool(const Ranking&)>& visit) const;
  std::size_t for_each(const std::function<bool(const RankedModel&)>& visit) const;

  std::vector<RankedModel> all() const;
  std::size_t count() const;

  const Vocabulary& vocabulary() const { return vocabulary_; }
  const SearchBounds& bounds() const { return bounds_; }

 private:
  Vocabulary vocabulary_;
  SearchBounds bounds_;
};

std::vector<RankedModel> enumerate_models(const Vocabulary& vocab, const SearchBounds& bounds);

}  // namespace colog
