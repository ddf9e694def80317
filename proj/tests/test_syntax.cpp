#include <string>

#include "colog/errors.hpp"
#include "colog/formula.hpp"
#include "colog/parser.hpp"
#include "colog/schema.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace colog;

namespace {
const Formula A = atom("A");
const Formula B = atom("B");
const Formula C = atom("C");
}  // namespace

TEST_CASE("parse reads the grammar") {
  CHECK(parse("~[](A -> B)") == neg(box(implies(A, B))));
  CHECK(parse("A => B") == cond(A, B));
  CHECK(parse("[i]~A | <*>(A & [](A -> B))") ==
        disj(ibox(neg(A)), alldia(conj(A, box(implies(A, B))))));
}

TEST_CASE("parse precedence and associativity") {
  CHECK(parse("A -> B -> C") == implies(A, implies(B, C)));
  CHECK(parse("A & B | C") == disj(conj(A, B), C));
  CHECK(parse("A | B & C") == disj(A, conj(B, C)));
  CHECK(parse("A => B => C") == cond(cond(A, B), C));
  CHECK(parse("A <=> B <=> C") == iff(iff(A, B), C));
  CHECK(parse("A -> B <=> C") == iff(implies(A, B), C));
  CHECK(parse("A <=> B => C") == cond(iff(A, B), C));
  CHECK(parse("~A & B") == conj(neg(A), B));
  CHECK(parse("[]<>[i]<i>[*]<*>A") == box(dia(ibox(idia(allbox(alldia(A)))))));
  CHECK(parse("  A\t&\n B ") == conj(A, B));
  CHECK(parse("[ i ] A") == ibox(A));
  CHECK(parse("true & false") == conj(top(), bottom()));
}

TEST_CASE("B and O are operators only before a parenthesis") {
  CHECK(parse("B(A)") == belief(A));
  CHECK(parse("B (A)") == belief(A));
  CHECK(parse("O(A & C)") == onlyknow(conj(A, C)));
  CHECK(parse("B") == B);
  CHECK(parse("~B(B) & ~B(~B)") == conj(neg(belief(B)), neg(belief(neg(B)))));
  CHECK(parse("B & O") == conj(B, atom("O")));
  CHECK(parse("BB") == atom("BB"));
}

TEST_CASE("parse errors carry a position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK(position_of("A $ B") == 2);
  CHECK(position_of("A &") == 3);
  CHECK(position_of("(A | B") == 6);
  CHECK(position_of("A B") == 2);
  CHECK(position_of("[x]A") == 0);
  CHECK(position_of("") == 0);
  CHECK(position_of("B(A") == 3);
  CHECK(position_of("?A") == 0);
  CHECK_THROWS_AS(parse("A -> "), ParseError);
}

TEST_CASE("render is canonical") {
  CHECK(render(box(A)) == "[]A");
  CHECK(render(cond(A, B)) == "A => B");
  CHECK(render(conj(neg(A), disj(B, C))) == "~A & (B | C)");
  CHECK(render(disj(ibox(neg(A)), alldia(conj(A, box(implies(A, B)))))) ==
        "[i]~A | <*>(A & [](A -> B))");
  CHECK(render(implies(implies(A, B), C)) == "(A -> B) -> C");
  CHECK(render(implies(A, implies(B, C))) == "A -> B -> C");
  CHECK(render(conj(A, conj(B, C))) == "A & (B & C)");
  CHECK(render(conj(conj(A, B), C)) == "A & B & C");
  CHECK(render(neg(belief(B))) == "~B(B)");
  CHECK(render(belief(conj(A, B))) == "B(A & B)");
  CHECK(render(cond(A, cond(B, C))) == "A => (B => C)");
}

TEST_CASE("atoms") {
  CHECK(atoms(parse("A => E")) == std::set<std::string>{"A", "E"});
  CHECK(atoms(parse("true")).empty());
  CHECK(atoms(desugar(belief(A))) == atoms(belief(A)));
  CHECK(atoms(desugar(belief(A))) == std::set<std::string>{"A"});
}

TEST_CASE("desugar rewrites derived modalities") {
  CHECK(desugar(dia(A)) == neg(box(neg(A))));
  CHECK(desugar(idia(A)) == neg(ibox(neg(A))));
  CHECK(desugar(allbox(A)) == conj(box(A), ibox(A)));
  CHECK(desugar(cond(A, B)) ==
        desugar(disj(allbox(neg(A)), alldia(conj(A, box(implies(A, B)))))));
  CHECK(desugar(belief(A)) == desugar(alldia(box(A))));
  CHECK(desugar(onlyknow(A)) == desugar(allbox(implies(A, conj(box(A), ibox(neg(A)))))));
  CHECK(is_core(desugar(cond(A, B))));
  CHECK(!is_core(cond(A, B)));
  CHECK(is_propositional(parse("A & ~(B -> C) <=> true")));
  CHECK(!is_propositional(parse("A & []B")));
}

TEST_CASE("property: desugar lands in the core fragment and is idempotent") {
  testing::FormulaGenerator gen(7, {"p", "q", "r"});
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen(5);
    const Formula d = desugar(f);
    CHECK(is_core(d));
    CHECK(desugar(d) == d);
    CHECK(atoms(d) == atoms(f));
  }
}

TEST_CASE("property: parse(render(f)) == f") {
  // B and O as atoms exercise the contextual keywords.
  testing::FormulaGenerator gen(42, {"A", "B", "O", "x_1"});
  for (int i = 0; i < 3000; ++i) {
    const Formula f = gen(6);
    const std::string text = render(f);
    INFO(text);
    CHECK(parse(text) == f);
  }
}

TEST_CASE("schema instantiation") {
  const Binding p{{"A", atom("p")}};
  CHECK(render(axiom_schema(AxiomId::T).instantiate(p)) == "[]p -> p");
  CHECK(render(instantiate(axiom_schema(AxiomId::H), {{"A", atom("p")}, {"B", atom("q")}})) ==
        "<*>([]p & [i]q) -> [*](p | q)");
  CHECK(render(axiom_schema(AxiomId::S).instantiate({{"A", parse("p & q")}})) ==
        "p & q -> [i]<>(p & q)");
  CHECK(axiom_schema(AxiomId::S).instantiate({{"A", parse("p & q")}}) ==
        parse("(p & q) -> [i]<>(p & q)"));
  CHECK_THROWS_AS(axiom_schema(AxiomId::K).instantiate(p), InputError);
  CHECK(axiom_schema(AxiomId::K).metavariables() == std::set<std::string>{"A", "B"});
}

TEST_CASE("schema metavariables never collide with atoms") {
  // `?A` is not an atom name the formula parser accepts.
  CHECK_THROWS_AS(parse("?A"), ParseError);
  CHECK(!is_valid_atom_name("?A"));
  CHECK(!is_valid_atom_name("true"));
  CHECK(is_valid_atom_name("B"));
  const Schema s = Schema::parse("?A -> A");
  CHECK(s.metavariables() == std::set<std::string>{"A"});
  CHECK(s.instantiate({{"A", atom("q")}}) == parse("q -> A"));
}

TEST_CASE("schema matching inverts instantiation") {
  testing::FormulaGenerator gen(3, {"p", "q"});
  for (AxiomId id : all_axioms()) {
    for (int i = 0; i < 50; ++i) {
      Binding b{{"A", gen(2)}, {"B", gen(2)}};
      for (auto it = b.begin(); it != b.end();) {
        it = axiom_schema(id).metavariables().count(it->first) ? std::next(it) : b.erase(it);
      }
      const Formula inst = axiom_schema(id).instantiate(b);
      auto m = axiom_schema(id).match(inst);
      REQUIRE(m.has_value());
      CHECK(*m == b);
    }
  }
}
