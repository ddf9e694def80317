#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "colog/formula.hpp"
#include "colog/model.hpp"
#include "colog/valuation.hpp"

namespace colog {

// A sentence class is identified by the mask of its truth set.
using ClassId = std::uint64_t;
using ClassSet = std::set<ClassId>;

inline constexpr std::size_t kMaxOrderingAtoms = 3;

// Number of sentence classes over n atoms, 2^(2^n).
std::size_t class_count(std::size_t atom_count);
ClassId full_class(std::size_t atom_count);
ClassId negate_class(ClassId c, std::size_t atom_count);

// M |= [*](B -> <>A), i.e. A is at least as plausible as B. Throws
// InputError on modal arguments.
bool plausibility_leq(const RankedModel& m, const Formula& a, const Formula& b);
// B is at most as entrenched as A: ~B is at least as plausible as ~A.
bool entrenchment_leq(const RankedModel& m, const Formula& b, const Formula& a);

// Total preorder over sentence classes. leq_pi(a, b) reads "b is at least as
// possible as a".
class QualitativeOrdering {
 public:
  static QualitativeOrdering from_relation(Vocabulary vocab,
                                           const std::function<bool(ClassId, ClassId)>& leq_pi);
  // Levels from most to least possible; every class must occur exactly once.
  static QualitativeOrdering from_levels(Vocabulary vocab, const std::vector<std::vector<ClassId>>& levels);

  const Vocabulary& vocabulary() const { return vocab_; }
  std::size_t atom_count() const { return vocab_.size(); }
  std::size_t size() const { return count_; }

  bool leq_pi(ClassId a, ClassId b) const { return leq_[a * count_ + b] != 0; }
  bool less_pi(ClassId a, ClassId b) const { return leq_pi(a, b) && !leq_pi(b, a); }
  // a >=N b iff ~b >=pi ~a.
  bool geq_n(ClassId a, ClassId b) const;
  // a <=E b iff b >=N a.
  bool leq_e(ClassId a, ClassId b) const { return geq_n(b, a); }

  // Classes grouped by possibility, most possible first. Throws InputError
  // unless the relation is a total preorder.
  std::vector<std::vector<ClassId>> levels() const;

  bool operator==(const QualitativeOrdering& o) const { return vocab_ == o.vocab_ && leq_ == o.leq_; }

 private:
  QualitativeOrdering(Vocabulary vocab, std::vector<char> leq);

  Vocabulary vocab_;
  std::size_t count_ = 0;
  std::vector<char> leq_;
};

// Plausibility ordering of a model over all classes of its vocabulary.
// Throws BoundsError beyond kMaxOrderingAtoms atoms.
QualitativeOrdering extract_ordering(const RankedModel& m);

// {a : a >N false}: classes whose negation is strictly less possible than
// true.
ClassSet belief_set(const QualitativeOrdering& ord);
ClassSet belief_set(const RankedModel& m);
// Classes whose negation is impossible in the model.
ClassSet completely_necessary(const QualitativeOrdering& ord);

struct PostulateResult {
  std::string name;
  bool passed = true;
  std::vector<ClassId> counterexample;  // first failing tuple
};

struct PostulateReport {
  std::vector<PostulateResult> results;

  bool all_passed() const;
  const PostulateResult& operator[](std::string_view name) const;
};

// N1-N6 over all classes, pairs and triples.
PostulateReport check_necessity_postulates(const QualitativeOrdering& ord);
// E1-E4, plus E5 when `co_star`. Throws InputError if `k` contains false or
// is not deductively closed.
PostulateReport check_entrenchment_postulates(const QualitativeOrdering& ord, const ClassSet& k,
                                              bool co_star);

// Rebuilds a ranked model from a possibility ordering: one world per
// valuation strictly more possible than false, ranked by cuts. Throws
// InputError if the ordering violates N1-N6 or no world is possible.
RankedModel model_from_ordering(const QualitativeOrdering& ord);

// "atoms: ..." then "level i: {dnf} {dnf} ..." from most possible down.
std::string to_text(const QualitativeOrdering& ord);
// Inverse of to_text; braces may hold any propositional formula. Throws
// ParseError with the line number.
QualitativeOrdering parse_ordering(std::string_view text);

}  // namespace colog
