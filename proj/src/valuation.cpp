#include "colog/valuation.hpp"

#include <algorithm>
#include <set>

#include "colog/errors.hpp"

namespace colog {

std::string to_bitstring(Valuation v, std::size_t atom_count) {
  if (atom_count == 0) return "-";
  std::string s(atom_count, '0');
  for (std::size_t i = 0; i < atom_count; ++i) {
    if (v[i]) s[i] = '1';
  }
  return s;
}

Valuation parse_bitstring(std::string_view s, std::size_t atom_count) {
  if (atom_count == 0) {
    if (s != "-") throw InputError("expected '-' for a world over the empty vocabulary");
    return {};
  }
  if (s.size() != atom_count) {
    throw InputError("world '" + std::string(s) + "' has " + std::to_string(s.size()) +
                     " bits, expected " + std::to_string(atom_count));
  }
  Valuation v;
  for (std::size_t i = 0; i < atom_count; ++i) {
    if (s[i] == '1') {
      v.bits |= 1u << i;
    } else if (s[i] != '0') {
      throw InputError("world '" + std::string(s) + "' is not a bit-string");
    }
  }
  return v;
}

std::size_t atom_index(const Vocabulary& vocab, std::string_view name) {
  auto it = std::find(vocab.begin(), vocab.end(), name);
  if (it == vocab.end()) throw UnknownAtomError(std::string(name));
  return static_cast<std::size_t>(it - vocab.begin());
}

bool eval_propositional(const Formula& p, const Vocabulary& vocab, Valuation v) {
  switch (p.kind()) {
    case Kind::Atom: return v[atom_index(vocab, p.name())];
    case Kind::Truth: return true;
    case Kind::Falsity: return false;
    case Kind::Not: return !eval_propositional(p.arg(), vocab, v);
    case Kind::And:
      return eval_propositional(p.lhs(), vocab, v) && eval_propositional(p.rhs(), vocab, v);
    case Kind::Or:
      return eval_propositional(p.lhs(), vocab, v) || eval_propositional(p.rhs(), vocab, v);
    case Kind::Implies:
      return !eval_propositional(p.lhs(), vocab, v) || eval_propositional(p.rhs(), vocab, v);
    case Kind::Iff:
      return eval_propositional(p.lhs(), vocab, v) == eval_propositional(p.rhs(), vocab, v);
    default:
      throw InputError("expected a propositional formula, found modal node " +
                       std::string(kind_name(p.kind())) + " in '" + render(p) + "'");
  }
}

TruthSet::TruthSet(std::uint64_t mask, std::size_t atom_count)
    : mask_(mask), atom_count_(atom_count) {
  if (atom_count > kMaxClassAtoms) {
    throw BoundsError("sentence classes support at most " + std::to_string(kMaxClassAtoms) +
                      " atoms");
  }
  mask_ &= full(atom_count).mask_;
}

TruthSet TruthSet::full(std::size_t atom_count) {
  TruthSet t;
  t.atom_count_ = atom_count;
  const std::size_t n = std::size_t{1} << atom_count;
  t.mask_ = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return t;
}

TruthSet TruthSet::of(const Formula& p, const Vocabulary& vocab) {
  TruthSet t(0, vocab.size());
  for (std::uint32_t b = 0; b < t.valuation_count(); ++b) {
    if (eval_propositional(p, vocab, Valuation{b})) t.mask_ |= std::uint64_t{1} << b;
  }
  return t;
}

TruthSet TruthSet::complement() const { return {~mask_, atom_count_}; }

std::vector<Valuation> TruthSet::valuations() const {
  std::vector<Valuation> out;
  for (std::uint32_t b = 0; b < valuation_count(); ++b) {
    if (contains(Valuation{b})) out.push_back(Valuation{b});
  }
  return out;
}

Formula minterm(Valuation v, const Vocabulary& vocab) {
  if (vocab.empty()) return top();
  Formula f = v[0] ? atom(vocab[0]) : neg(atom(vocab[0]));
  for (std::size_t i = 1; i < vocab.size(); ++i) {
    f = conj(f, v[i] ? atom(vocab[i]) : neg(atom(vocab[i])));
  }
  return f;
}

Formula TruthSet::representative(const Vocabulary& vocab) const {
  if (is_empty()) return bottom();
  if (is_full()) return top();
  std::vector<Valuation> vs = valuations();
  Formula f = minterm(vs[0], vocab);
  for (std::size_t i = 1; i < vs.size(); ++i) f = disj(f, minterm(vs[i], vocab));
  return f;
}

std::string TruthSet::canonical_dnf(const Vocabulary& vocab) const {
  return render(representative(vocab));
}

bool satisfiable(const Formula& p, const Vocabulary& vocab) {
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << vocab.size()); ++b) {
    if (eval_propositional(p, vocab, Valuation{static_cast<std::uint32_t>(b)})) return true;
  }
  return false;
}

Vocabulary vocabulary_of(const std::vector<Formula>& fs) {
  std::set<std::string> names;
  for (const Formula& f : fs) {
    auto a = atoms(f);
    names.insert(a.begin(), a.end());
  }
  return {names.begin(), names.end()};
}

}  // namespace colog
