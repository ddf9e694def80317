#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "colog/enumerate.hpp"
#include "colog/formula.hpp"

namespace colog {

struct Witness {
  RankedModel model;
  // World at which the refuted formula fails.
  std::size_t world = 0;
};

// Outcome of a bounded search. Absence of a countermodel never means
// "valid": only that none exists within the searched bounds.
struct Verdict {
  enum class Status { ValidWithinBounds, Countermodel };

  Status status = Status::ValidWithinBounds;
  std::optional<Witness> witness;  // present iff status == Countermodel
  std::size_t models_checked = 0;

  bool holds() const { return status == Status::ValidWithinBounds; }

  static Verdict valid(std::size_t checked) { return {Status::ValidWithinBounds, std::nullopt, checked}; }
  static Verdict refuted(Witness w, std::size_t checked) { return {Status::Countermodel, std::move(w), checked}; }
};

std::string_view status_name(Verdict::Status s);  // "valid-within-bounds" / "countermodel"

enum class Consequence {
  // Premises hold at every world of the model; the goal must hold at every
  // world of every such model.
  Global,
  // Truth-preservation at each world.
  Local,
};

// Searches the bounded model class for a model where the premises hold but
// the goal fails. The vocabulary is the sorted set of atoms of all formulas.
// Returns the first countermodel in enumeration order.
Verdict find_countermodel(const std::vector<Formula>& premises, const Formula& goal,
                          const SearchBounds& bounds, Consequence mode = Consequence::Global);

}  // namespace colog
