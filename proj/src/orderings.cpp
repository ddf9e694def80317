#include "colog/orderings.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "colog/errors.hpp"
#include "colog/evaluate.hpp"
#include "colog/parser.hpp"

namespace colog {

std::size_t class_count(std::size_t atom_count) {
  if (atom_count > kMaxOrderingAtoms) {
    throw BoundsError("orderings are limited to " + std::to_string(kMaxOrderingAtoms) + " atoms");
  }
  return std::size_t{1} << (std::size_t{1} << atom_count);
}

ClassId full_class(std::size_t atom_count) { return class_count(atom_count) - 1; }

ClassId negate_class(ClassId c, std::size_t atom_count) { return ~c & full_class(atom_count); }

namespace {

void require_propositional(const Formula& f) {
  if (!is_propositional(f)) throw InputError("expected a propositional formula: " + render(f));
}

}  // namespace

bool plausibility_leq(const RankedModel& m, const Formula& a, const Formula& b) {
  require_propositional(a);
  require_propositional(b);
  return holds_globally(m, allbox(implies(b, dia(a))));
}

bool entrenchment_leq(const RankedModel& m, const Formula& b, const Formula& a) {
  return plausibility_leq(m, neg(b), neg(a));
}

QualitativeOrdering::QualitativeOrdering(Vocabulary vocab, std::vector<char> leq)
    : vocab_(std::move(vocab)), count_(class_count(vocab_.size())), leq_(std::move(leq)) {}

QualitativeOrdering QualitativeOrdering::from_relation(
    Vocabulary vocab, const std::function<bool(ClassId, ClassId)>& leq_pi) {
  const std::size_t n = class_count(vocab.size());
  std::vector<char> leq(n * n);
  for (ClassId a = 0; a < n; ++a) {
    for (ClassId b = 0; b < n; ++b) leq[a * n + b] = leq_pi(a, b) ? 1 : 0;
  }
  return QualitativeOrdering(std::move(vocab), std::move(leq));
}

QualitativeOrdering QualitativeOrdering::from_levels(Vocabulary vocab,
                                                     const std::vector<std::vector<ClassId>>& levels) {
  const std::size_t n = class_count(vocab.size());
  std::vector<std::size_t> level(n, n);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (ClassId c : levels[i]) {
      if (c >= n) throw InputError("class id out of range");
      if (level[c] != n) throw InputError("class listed twice");
      level[c] = i;
    }
  }
  if (std::find(level.begin(), level.end(), n) != level.end()) throw InputError("class missing from the levels");
  return from_relation(std::move(vocab), [&](ClassId a, ClassId b) { return level[b] <= level[a]; });
}

bool QualitativeOrdering::geq_n(ClassId a, ClassId b) const {
  const ClassId full = count_ - 1;
  return leq_pi(~a & full, ~b & full);
}

std::vector<std::vector<ClassId>> QualitativeOrdering::levels() const {
  std::vector<std::size_t> above(count_, 0);
  for (ClassId a = 0; a < count_; ++a) {
    for (ClassId b = 0; b < count_; ++b) {
      if (!leq_pi(a, b) && !leq_pi(b, a)) throw InputError("ordering is not total");
      if (less_pi(a, b)) ++above[a];
    }
  }
  std::map<std::size_t, std::vector<ClassId>> grouped;
  for (ClassId c = 0; c < count_; ++c) grouped[above[c]].push_back(c);
  std::vector<std::vector<ClassId>> out;
  for (auto& [_, cs] : grouped) out.push_back(std::move(cs));
  // A total preorder puts equivalent classes in one group and orders groups.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ClassId a : out[i]) {
      for (std::size_t j = 0; j < out.size(); ++j) {
        for (ClassId b : out[j]) {
          if (leq_pi(b, a) != (i <= j)) throw InputError("ordering is not a total preorder");
        }
      }
    }
  }
  return out;
}

QualitativeOrdering extract_ordering(const RankedModel& m) {
  const std::size_t worlds = m.size();
  auto in = [&](ClassId c, std::size_t w) { return ((c >> m.world(w).valuation.bits) & 1u) != 0; };
  // leq_pi(a, b): every a-world sees some b-world.
  return QualitativeOrdering::from_relation(m.vocabulary(), [&](ClassId a, ClassId b) {
    for (std::size_t w = 0; w < worlds; ++w) {
      if (!in(a, w)) continue;
      bool sees = false;
      for (std::size_t v = 0; v < worlds && !sees; ++v) sees = m.accessible(w, v) && in(b, v);
      if (!sees) return false;
    }
    return true;
  });
}

ClassSet belief_set(const QualitativeOrdering& ord) {
  ClassSet k;
  const ClassId full = full_class(ord.atom_count());
  for (ClassId a = 0; a < ord.size(); ++a) {
    if (ord.less_pi(~a & full, full)) k.insert(a);
  }
  return k;
}

ClassSet belief_set(const RankedModel& m) { return belief_set(extract_ordering(m)); }

ClassSet completely_necessary(const QualitativeOrdering& ord) {
  ClassSet out;
  const ClassId full = full_class(ord.atom_count());
  for (ClassId a = 0; a < ord.size(); ++a) {
    if (ord.leq_pi(~a & full, 0)) out.insert(a);
  }
  return out;
}

bool PostulateReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const PostulateResult& r) { return r.passed; });
}

const PostulateResult& PostulateReport::operator[](std::string_view name) const {
  for (const auto& r : results) {
    if (r.name == name) return r;
  }
  throw InputError("no postulate named " + std::string(name));
}

namespace {

class Checker {
 public:
  Checker(std::string name, std::size_t classes) : classes_(classes) { result_.name = std::move(name); }

  template <class F>
  Checker& singles(F ok) {
    for (ClassId a = 0; a < classes_ && result_.passed; ++a) {
      if (!ok(a)) fail({a});
    }
    return *this;
  }
  template <class F>
  Checker& pairs(F ok) {
    for (ClassId a = 0; a < classes_ && result_.passed; ++a) {
      for (ClassId b = 0; b < classes_ && result_.passed; ++b) {
        if (!ok(a, b)) fail({a, b});
      }
    }
    return *this;
  }
  template <class F>
  Checker& triples(F ok) {
    for (ClassId a = 0; a < classes_ && result_.passed; ++a) {
      for (ClassId b = 0; b < classes_ && result_.passed; ++b) {
        for (ClassId c = 0; c < classes_ && result_.passed; ++c) {
          if (!ok(a, b, c)) fail({a, b, c});
        }
      }
    }
    return *this;
  }
  Checker& holds(bool ok) {
    if (!ok && result_.passed) fail({});
    return *this;
  }

  PostulateResult result() const { return result_; }

 private:
  void fail(std::vector<ClassId> witness) {
    result_.passed = false;
    result_.counterexample = std::move(witness);
  }

  std::size_t classes_;
  PostulateResult result_;
};

}  // namespace

PostulateReport check_necessity_postulates(const QualitativeOrdering& ord) {
  const std::size_t n = ord.size();
  const ClassId top = n - 1;
  auto geq = [&](ClassId a, ClassId b) { return ord.geq_n(a, b); };
  PostulateReport r;
  r.results.push_back(Checker("N1", n).singles([&](ClassId a) { return geq(a, a); }).result());
  r.results.push_back(Checker("N2", n).pairs([&](ClassId a, ClassId b) { return geq(a, b) || geq(b, a); }).result());
  r.results.push_back(Checker("N3", n)
                          .triples([&](ClassId a, ClassId b, ClassId c) {
                            return !(geq(a, b) && geq(b, c)) || geq(a, c);
                          })
                          .result());
  r.results.push_back(Checker("N4", n).holds(geq(top, 0) && !geq(0, top)).result());
  r.results.push_back(Checker("N5", n).singles([&](ClassId a) { return geq(top, a); }).result());
  r.results.push_back(Checker("N6", n)
                          .triples([&](ClassId a, ClassId b, ClassId c) {
                            return !geq(b, c) || geq(a & b, a & c);
                          })
                          .result());
  return r;
}

PostulateReport check_entrenchment_postulates(const QualitativeOrdering& ord, const ClassSet& k,
                                              bool co_star) {
  const std::size_t n = ord.size();
  const ClassId top = n - 1;
  if (k.count(0)) throw InputError("belief set is inconsistent");
  if (!k.count(top)) throw InputError("belief set is not deductively closed: true is missing");
  for (ClassId a : k) {
    for (ClassId b = 0; b < n; ++b) {
      if ((a & ~b) == 0 && !k.count(b)) throw InputError("belief set is not closed under consequence");
    }
    for (ClassId b : k) {
      if (!k.count(a & b)) throw InputError("belief set is not closed under conjunction");
    }
  }
  auto leq = [&](ClassId a, ClassId b) { return ord.leq_e(a, b); };
  PostulateReport r;
  r.results.push_back(Checker("E1", n)
                          .triples([&](ClassId a, ClassId b, ClassId c) {
                            return !(leq(a, b) && leq(b, c)) || leq(a, c);
                          })
                          .result());
  r.results.push_back(
      Checker("E2", n).pairs([&](ClassId a, ClassId b) { return (a & ~b) != 0 || leq(a, b); }).result());
  r.results.push_back(Checker("E3", n)
                          .pairs([&](ClassId a, ClassId b) {
                            return !(k.count(a) && k.count(b)) || leq(a, a & b) || leq(b, a & b);
                          })
                          .result());
  r.results.push_back(Checker("E4", n)
                          .singles([&](ClassId a) {
                            bool below_all = true;
                            for (ClassId b = 0; b < n && below_all; ++b) below_all = leq(a, b);
                            return (k.count(a) == 0) == below_all;
                          })
                          .result());
  if (co_star) {
    r.results.push_back(Checker("E5", n)
                            .singles([&](ClassId a) {
                              bool above_all = true;
                              for (ClassId b = 0; b < n && above_all; ++b) above_all = leq(b, a);
                              return !above_all || a == top;
                            })
                            .result());
  }
  return r;
}

RankedModel model_from_ordering(const QualitativeOrdering& ord) {
  const PostulateReport report = check_necessity_postulates(ord);
  for (const auto& res : report.results) {
    if (!res.passed) throw InputError("ordering violates " + res.name);
  }
  const auto levels = ord.levels();
  std::vector<std::size_t> level_of(ord.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (ClassId c : levels[i]) level_of[c] = i;
  }
  const std::size_t atoms = ord.atom_count();
  std::vector<std::pair<std::size_t, std::uint32_t>> placed;
  for (std::uint32_t v = 0; v < (1u << atoms); ++v) {
    const std::size_t l = level_of[ClassId{1} << v];
    if (l < level_of[0]) placed.emplace_back(l, v);
  }
  if (placed.empty()) throw InputError("ordering leaves no possible world");
  std::vector<std::size_t> used;
  for (const auto& [l, _] : placed) used.push_back(l);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<World> worlds;
  for (const auto& [l, v] : placed) {
    const auto r = static_cast<Rank>(std::lower_bound(used.begin(), used.end(), l) - used.begin());
    worlds.push_back(World{Valuation{v}, r});
  }
  RankedModel m(ord.vocabulary(), std::move(worlds));
  if (!(extract_ordering(m) == ord)) throw InputError("ordering is not determined by any ranked model");
  return m;
}

std::string to_text(const QualitativeOrdering& ord) {
  std::ostringstream out;
  out << "atoms:";
  for (const auto& a : ord.vocabulary()) out << ' ' << a;
  out << '\n';
  const auto levels = ord.levels();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    out << "level " << i << ':';
    for (ClassId c : levels[i]) out << " {" << TruthSet(c, ord.atom_count()).canonical_dnf(ord.vocabulary()) << '}';
    out << '\n';
  }
  return out.str();
}

QualitativeOrdering parse_ordering(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<Vocabulary> vocab;
  std::vector<std::vector<ClassId>> levels;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto fail = [&](const std::string& msg, std::size_t pos = 0) {
      return ParseError("line " + std::to_string(lineno) + ": " + msg, pos, lineno);
    };
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw fail("expected 'atoms:' or 'level N:'");
    std::istringstream head(line.substr(0, colon));
    std::string word, index, extra;
    head >> word >> index >> extra;
    if (word == "atoms" && index.empty()) {
      if (vocab) throw fail("duplicate atoms line");
      vocab.emplace();
      std::istringstream body(line.substr(colon + 1));
      for (std::string a; body >> a;) {
        if (!is_valid_atom_name(a)) throw fail("invalid atom name '" + a + "'");
        vocab->push_back(a);
      }
      if (vocab->size() > kMaxOrderingAtoms) throw fail("too many atoms for an ordering");
      continue;
    }
    if (word != "level" || index != std::to_string(levels.size()) || !extra.empty()) {
      throw fail("expected 'level " + std::to_string(levels.size()) + ":'");
    }
    if (!vocab) throw fail("level line before the atoms line");
    std::vector<ClassId> level;
    std::size_t pos = colon + 1;
    for (;;) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) break;
      if (line[pos] != '{') throw fail("expected '{'", pos);
      const auto close = line.find('}', pos);
      if (close == std::string::npos) throw fail("unterminated '{'", pos);
      try {
        const Formula f = parse(std::string_view(line).substr(pos + 1, close - pos - 1));
        level.push_back(TruthSet::of(f, *vocab).mask());
      } catch (const ParseError& e) {
        throw fail(e.what(), pos + 1 + e.position());
      } catch (const Error& e) {
        throw fail(e.what(), pos + 1);
      }
      pos = close + 1;
    }
    if (level.empty()) throw fail("empty level");
    levels.push_back(std::move(level));
  }
  if (!vocab) throw ParseError("missing 'atoms:' line", 0, lineno);
  try {
    return QualitativeOrdering::from_levels(*vocab, levels);
  } catch (const InputError& e) {
    throw ParseError(e.what(), 0, lineno);
  }
}

}  // namespace colog
