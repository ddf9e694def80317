#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "colog/formula.hpp"

namespace colog {

// Ordered atom names. Position i is bit i of a Valuation.
using Vocabulary = std::vector<std::string>;

// Truth sets are 64-bit masks over valuations.
inline constexpr std::size_t kMaxClassAtoms = 6;

// Total truth assignment; bit i is the value of vocabulary[i].
struct Valuation {
  std::uint32_t bits = 0;

  bool operator[](std::size_t atom) const { return ((bits >> atom) & 1u) != 0; }
  auto operator<=>(const Valuation&) const = default;
};

// Character i is the value of atom i ('1' true). An empty vocabulary renders
// as "-".
std::string to_bitstring(Valuation v, std::size_t atom_count);
Valuation parse_bitstring(std::string_view s, std::size_t atom_count);

// Index of `name` in `vocab`; throws UnknownAtomError.
std::size_t atom_index(const Vocabulary& vocab, std::string_view name);

// Classical evaluation of a propositional formula. Throws InputError on a
// modal node and UnknownAtomError on an atom outside `vocab`.
bool eval_propositional(const Formula& p, const Vocabulary& vocab, Valuation v);

// Set of valuations over a vocabulary of at most kMaxClassAtoms atoms: the
// extension of a propositional sentence.
class TruthSet {
 public:
  TruthSet() = default;
  TruthSet(std::uint64_t mask, std::size_t atom_count);

  static TruthSet empty(std::size_t atom_count) { return {0, atom_count}; }
  static TruthSet full(std::size_t atom_count);
  static TruthSet of(const Formula& p, const Vocabulary& vocab);

  std::uint64_t mask() const { return mask_; }
  std::size_t atom_count() const { return atom_count_; }
  std::size_t valuation_count() const { return std::size_t{1} << atom_count_; }

  bool contains(Valuation v) const { return ((mask_ >> v.bits) & 1u) != 0; }
  bool is_empty() const { return mask_ == 0; }
  bool is_full() const { return *this == full(atom_count_); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool subset_of(const TruthSet& o) const { return (mask_ & ~o.mask_) == 0; }

  TruthSet complement() const;
  TruthSet operator&(const TruthSet& o) const { return {mask_ & o.mask_, atom_count_}; }
  TruthSet operator|(const TruthSet& o) const { return {mask_ | o.mask_, atom_count_}; }

  std::vector<Valuation> valuations() const;

  // Disjunction of minterms in valuation order; "false" when empty and
  // "true" when full.
  std::string canonical_dnf(const Vocabulary& vocab) const;
  Formula representative(const Vocabulary& vocab) const;

  bool operator==(const TruthSet&) const = default;

 private:
  std::uint64_t mask_ = 0;
  std::size_t atom_count_ = 0;
};

// Conjunction of literals describing exactly one valuation.
Formula minterm(Valuation v, const Vocabulary& vocab);

bool satisfiable(const Formula& p, const Vocabulary& vocab);

// Sorted union of the atoms of every formula.
Vocabulary vocabulary_of(const std::vector<Formula>& fs);

}  // namespace colog
