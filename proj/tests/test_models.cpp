#include <algorithm>
#include <set>

#include "colog/enumerate.hpp"
#include "colog/errors.hpp"
#include "colog/evaluate.hpp"
#include "colog/parser.hpp"
#include "colog/search.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace colog;
using colog::testing::three_level;

namespace {

bool everywhere(const RankedModel& m, const char* f) { return holds_globally(m, parse(f)); }

RankedModel single_world(const char* bits, const Vocabulary& vocab) {
  return RankedModel(vocab, {World{parse_bitstring(bits, vocab.size()), 0}});
}

}  // namespace

TEST_CASE("three-level model parses and prints bit-exact") {
  const RankedModel m = three_level();
  CHECK(m.size() == 6);
  CHECK(m.max_rank() == 2);
  CHECK(to_text(m) == colog::testing::kThreeLevelText);
  CHECK(parse_model(to_text(m)) == m);
}

TEST_CASE("model text errors name the line") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_model(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    FAIL("expected failure");
    return 0;
  };
  CHECK(line_of("atoms: A\nrank 1: 1\n") == 2);
  CHECK(line_of("atoms: A\nrank 0: 1\nrank 0: 0\n") == 3);
  CHECK(line_of("atoms: A B\nrank 0: 1\n") == 2);
  CHECK(line_of("atoms: A true\n") == 1);
  CHECK(line_of("rank 0: 1\n") == 1);
  CHECK(line_of("atoms: A\nrank 0: 12\n") == 2);
  CHECK(line_of("atoms: A\nrank 0:\n") == 2);
  CHECK_THROWS_AS(parse_model("atoms: A\n"), ParseError);
  CHECK_THROWS_AS(RankedModel({"A"}, {World{Valuation{0}, 1}}), InputError);
  CHECK_THROWS_AS(RankedModel({"A"}, {}), InputError);
}

TEST_CASE("evaluate on the three-level model") {
  const RankedModel m = three_level();
  for (std::size_t w = 0; w < m.size(); ++w) {
    CHECK(evaluate(m, w, parse("[*](A | B)")));
    CHECK(evaluate(m, w, parse("B(A) & B(C)")));
    CHECK(evaluate(m, w, parse("~B(B) & ~B(~B)")));
    CHECK(evaluate(m, w, parse("[*]true")));
  }
  CHECK(everywhere(m, "O(A & C)"));
  CHECK(!everywhere(m, "[i]false"));
  CHECK(!evaluate(m, 0, parse("[i]false")));
  CHECK(evaluate(m, 4, parse("[i]false")));
  CHECK_THROWS_AS(evaluate(m, 0, parse("D")), UnknownAtomError);
  CHECK_THROWS_AS(evaluate(m, 6, parse("A")), InputError);
}

TEST_CASE("box and inaccessible box quantify over ranks") {
  const RankedModel m = three_level();
  // World 2 (AB~C) is at rank 1: it sees ranks 0 and 1, not rank 2.
  CHECK(evaluate(m, 2, parse("[]A")));
  CHECK(!evaluate(m, 2, parse("[]C")));
  CHECK(evaluate(m, 2, parse("[i]~A")));
  CHECK(evaluate(m, 0, parse("[]C")));
  CHECK(!evaluate(m, 0, parse("[i]C")));
  CHECK(evaluate(m, 4, parse("<>~A")));
  CHECK(!evaluate(m, 0, parse("<>~A")));
  CHECK(evaluate(m, 0, parse("<i>~A")));
}

TEST_CASE("holds_globally on a single world") {
  const RankedModel one = single_world("1", {"A"});
  CHECK(everywhere(one, "[i]false"));
  CHECK(everywhere(one, "[]A & A"));
}

TEST_CASE("min_rank") {
  const RankedModel m = three_level();
  CHECK(min_rank(m, parse("~C")) == 1);
  CHECK(min_rank(m, parse("~A & ~B")) == kInfiniteRank);
  CHECK(min_rank(m, parse("A & C")) == 0);
  CHECK(min_rank(m, parse("~A")) == 2);
  CHECK_THROWS_AS(min_rank(m, parse("[]A")), InputError);
}

TEST_CASE("property: min_rank distributes over disjunction") {
  testing::FormulaGenerator gen(11, {"p", "q"}, false, false);
  for (const RankedModel& m : enumerate_models({"p", "q"}, SearchBounds::co(2))) {
    for (int i = 0; i < 10; ++i) {
      const Formula a = gen(2), b = gen(2);
      CHECK(min_rank(m, disj(a, b)) == std::min(min_rank(m, a), min_rank(m, b)));
    }
  }
}

TEST_CASE("is_co_star") {
  CHECK(!is_co_star(three_level()));
  CHECK(is_co_star(parse_model("atoms: A B\nrank 0: 00 01 10 11\n")));
  CHECK(!is_co_star(single_world("1", {"A"})));
}

TEST_CASE("enumeration counts match the oracles") {
  // Oracle values computed by direct listing of rank functions.
  CHECK(colog::testing::count_rankings_by_listing(2) == 3);
  CHECK(colog::testing::count_rankings_by_listing(4) == 75);
  CHECK(colog::testing::fubini(2) == 3);
  CHECK(colog::testing::fubini(4) == 75);
  CHECK(colog::testing::fubini(8) == 545835);

  CHECK(ModelEnumerator({"p"}, SearchBounds::co_star(1)).count() == 3);
  CHECK(ModelEnumerator({"p", "q"}, SearchBounds::co_star(2)).count() == 75);

  std::uint64_t co_n2 = 0;
  for (unsigned k = 1; k <= 4; ++k) co_n2 += colog::testing::binomial(4, k) * colog::testing::fubini(k);
  CHECK(co_n2 == 149);
  CHECK(ModelEnumerator({"p", "q"}, SearchBounds::co(2)).count() == 149);
  CHECK(ModelEnumerator({"p"}, SearchBounds::co(1)).count() == 1 + 1 + 3);
}

TEST_CASE("enumeration yields distinct well-formed models") {
  for (const SearchBounds& b : {SearchBounds::co(2), SearchBounds::co_star(2), SearchBounds::co(2, 2)}) {
    const auto models = enumerate_models({"p", "q"}, b);
    std::set<std::string> seen;
    for (const RankedModel& m : models) {
      CHECK(seen.insert(to_text(m)).second);
      if (b.require_all_valuations) CHECK(m.is_co_star());
      // Derived accessibility is a total preorder.
      for (std::size_t w = 0; w < m.size(); ++w) {
        CHECK(m.accessible(w, w));
        for (std::size_t v = 0; v < m.size(); ++v) {
          CHECK((m.accessible(w, v) || m.accessible(v, w)));
          for (std::size_t u = 0; u < m.size(); ++u) {
            if (m.accessible(w, v) && m.accessible(v, u)) CHECK(m.accessible(w, u));
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration with multiplicity keeps copies on distinct ranks") {
  const auto models = enumerate_models({"p"}, SearchBounds::co(1, 2));
  // Level sets per valuation; hand count over {0, 1}:
  // one valuation: k=1 {0}, k=2 {01}; two valuations: see listing below.
  std::size_t with_copy = 0;
  for (const RankedModel& m : models) {
    std::set<std::pair<std::uint32_t, Rank>> worlds;
    for (const World& w : m.worlds()) CHECK(worlds.insert({w.valuation.bits, w.rank}).second);
    if (m.size() > 2 || (m.size() == 2 && m.world(0).valuation == m.world(1).valuation)) ++with_copy;
  }
  CHECK(models.size() > 5);
  CHECK(with_copy > 0);
}

TEST_CASE("enumeration order is deterministic and starts with the smallest subset") {
  const auto first = enumerate_models({"p"}, SearchBounds::co(1));
  CHECK(to_text(first.front()) == "atoms: p\nrank 0: 0\n");
  CHECK(to_text(first[1]) == "atoms: p\nrank 0: 1\n");
  CHECK(to_text(first[2]) == "atoms: p\nrank 0: 0 1\n");
  CHECK(to_text(first[3]) == "atoms: p\nrank 0: 0\nrank 1: 1\n");
  CHECK(to_text(first[4]) == "atoms: p\nrank 0: 1\nrank 1: 0\n");
}

TEST_CASE("bounds are enforced") {
  CHECK_THROWS_AS(ModelEnumerator({"a", "b", "c", "d"}, SearchBounds::co_star(4)), BoundsError);
  CHECK_THROWS_AS(ModelEnumerator({"a", "b", "c"}, SearchBounds::co(3, 2)), BoundsError);
  CHECK_THROWS_AS(ModelEnumerator({"a", "b", "c"}, SearchBounds::co(2)), BoundsError);
  CHECK_THROWS_AS(ModelEnumerator({"a"}, SearchBounds{1, 0, false, false}), BoundsError);
  SearchBounds lifted = SearchBounds::co(4);
  lifted.allow_beyond_ceiling = true;
  CHECK_NOTHROW(ModelEnumerator({"a", "b", "c", "d"}, lifted));
}

TEST_CASE("find_countermodel") {
  const Verdict t = find_countermodel({}, parse("[]p -> p"), SearchBounds::co(1));
  CHECK(t.holds());
  CHECK(t.models_checked == 5);

  const Verdict lp_co = find_countermodel({}, parse("<*>p"), SearchBounds::co(1));
  REQUIRE(!lp_co.holds());
  REQUIRE(lp_co.witness.has_value());
  CHECK(to_text(lp_co.witness->model) == "atoms: p\nrank 0: 0\n");
  CHECK(!evaluate(lp_co.witness->model, lp_co.witness->world, parse("<*>p")));

  CHECK(find_countermodel({}, parse("<*>p"), SearchBounds::co_star(1)).holds());

  const Verdict consistent =
      find_countermodel({}, parse("~(~(A => B) & ~(A => ~B))"), SearchBounds::co_star(2));
  REQUIRE(!consistent.holds());
  CHECK(holds_globally(consistent.witness->model, parse("~(A => B) & ~(A => ~B)")));
}

TEST_CASE("global and local consequence differ") {
  // p globally forces []p; locally it does not.
  CHECK(find_countermodel({parse("p")}, parse("[]p"), SearchBounds::co(1)).holds());
  const Verdict local =
      find_countermodel({parse("p")}, parse("[]p"), SearchBounds::co(1), Consequence::Local);
  REQUIRE(!local.holds());
  const auto& w = *local.witness;
  CHECK(evaluate(w.model, w.world, parse("p")));
  CHECK(!evaluate(w.model, w.world, parse("[]p")));
}

TEST_CASE("property: native sugar agrees with desugaring") {
  testing::FormulaGenerator gen(5, {"p", "q"});
  std::vector<Formula> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(gen(3));
  for (const RankedModel& m : enumerate_models({"p", "q"}, SearchBounds::co(2))) {
    Evaluator e(m);
    for (const Formula& f : pool) {
      INFO(render(f));
      CHECK(e.truth(f) == e.truth(desugar(f)));
    }
  }
}

TEST_CASE("belief collapses to truth at rank 0") {
  testing::FormulaGenerator gen(9, {"p", "q"});
  for (const RankedModel& m : enumerate_models({"p", "q"}, SearchBounds::co(2))) {
    Evaluator e(m);
    for (int i = 0; i < 8; ++i) {
      const Formula f = gen(2);
      const WorldSet b = e.truth(desugar(belief(f)));
      const WorldSet t = e.truth(f);
      bool at_rank0 = true;
      for (std::size_t w = 0; w < m.size(); ++w) {
        if (m.rank(w) == 0) at_rank0 = at_rank0 && t[w];
      }
      const bool some = std::any_of(b.begin(), b.end(), [](char c) { return c != 0; });
      const bool all = std::all_of(b.begin(), b.end(), [](char c) { return c != 0; });
      CHECK(some == all);
      CHECK(all == at_rank0);
    }
  }
}

TEST_CASE("only-knowing shape") {
  const Vocabulary vocab{"p", "q"};
  testing::FormulaGenerator gen(13, vocab, false, false);
  for (const RankedModel& m : enumerate_models(vocab, SearchBounds::co(2))) {
    for (int i = 0; i < 6; ++i) {
      const Formula kb = gen(2);
      if (!satisfiable(kb, vocab)) continue;
      const WorldSet t = Evaluator(m).truth(kb);
      bool exact = true, any = false;
      for (std::size_t w = 0; w < m.size(); ++w) {
        any = any || t[w];
        exact = exact && ((t[w] != 0) == (m.rank(w) == 0));
      }
      const bool o = holds_globally(m, desugar(onlyknow(kb)));
      CHECK(o == (!any || exact));
      if (m.is_co_star()) CHECK(o == exact);
    }
  }
}
