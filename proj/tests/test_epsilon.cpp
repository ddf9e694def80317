#include <algorithm>
#include <random>

#include "colog/epsilon.hpp"
#include "colog/errors.hpp"
#include "colog/parser.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace colog;

namespace {

ConditionalRule rule(const char* text) { return ConditionalRule::parse(text); }

std::vector<ConditionalRule> rules(std::initializer_list<const char*> texts) {
  std::vector<ConditionalRule> out;
  for (const char* t : texts) out.push_back(rule(t));
  return out;
}

std::vector<std::string> texts(const std::vector<ConditionalRule>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(r.text());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("material counterpart") {
  CHECK(render(material(rule("A => E"))) == "A -> E");
  CHECK(render(material(rule("S => ~E"))) == "S -> ~E");
  CHECK(render(material(rule("true => B"))) == "true -> B");
}

TEST_CASE("tolerance against a hand enumeration") {
  // Valuations over (A, E, S) written out by hand.
  auto witness = [](auto verified, auto others) {
    for (int a = 0; a < 2; ++a)
      for (int e = 0; e < 2; ++e)
        for (int s = 0; s < 2; ++s)
          if (verified(a, e, s) && others(a, e, s)) return true;
    return false;
  };
  const bool a_e = witness([](int a, int e, int) { return a && e; },
                           [](int a, int e, int s) { return (!s || a) && (!s || !e); });
  const bool s_ne = witness([](int, int e, int s) { return s && !e; },
                            [](int a, int e, int s) { return (!a || e) && (!s || a); });
  CHECK(a_e);
  CHECK(!s_ne);
  CHECK(tolerated(rule("A => E"), rules({"S => A", "S => ~E"})) == a_e);
  CHECK(tolerated(rule("S => ~E"), rules({"A => E", "S => A"})) == s_ne);
  CHECK(tolerated(rule("A => B"), {}));
  CHECK(!tolerated(rule("A => false"), {}));
  CHECK(!tolerated(rule("A => B"), rules({"A => ~B"})));
}

TEST_CASE("tolerance partitions") {
  const auto student = ConditionalKB::parse(testing::kStudentKb).rules();
  const auto p = epsilon_consistent(student);
  REQUIRE(p);
  REQUIRE(p->size() == 2);
  CHECK(texts((*p)[0]) == std::vector<std::string>{"A => E"});
  CHECK(texts((*p)[1]) == std::vector<std::string>{"S => A", "S => ~E"});

  CHECK(!epsilon_consistent(rules({"A => B", "A => ~B"})));
  const auto empty = epsilon_consistent({});
  REQUIRE(empty);
  CHECK(empty->empty());
}

TEST_CASE("epsilon entailment") {
  const auto student = ConditionalKB::parse(testing::kStudentKb).rules();
  CHECK(epsilon_entails(student, rule("S & A => ~E")));
  CHECK(!epsilon_entails(student, rule("S & A => E")));
  CHECK(epsilon_entails({}, rule("A => A")));
  CHECK(!epsilon_entails({}, rule("A => B")));
  CHECK(epsilon_entails(rules({"A => B", "A => ~B"}), rule("C => D")));
  CHECK(!epsilon_entails(rules({"A => B", "B => C"}), rule("A & B => C")));
  CHECK(epsilon_entails(rules({"A => B", "A => C"}), rule("A => B & C")));
  CHECK(epsilon_entails(rules({"A => B", "A => C"}), rule("A & B => C")));
  CHECK(!epsilon_entails(rules({"A => B", "B => C"}), rule("A => C")));
}

TEST_CASE("property: peeling is order independent") {
  std::mt19937 rng(5);
  testing::FormulaGenerator gen(8, {"A", "B", "C"}, false, false);
  for (int i = 0; i < 100; ++i) {
    std::vector<ConditionalRule> rs;
    while (rs.size() < 4) {
      const Formula a = gen(1);
      if (satisfiable(a, {"A", "B", "C"})) rs.emplace_back(a, gen(1));
    }
    const auto p = epsilon_consistent(rs);
    std::shuffle(rs.begin(), rs.end(), rng);
    const auto q = epsilon_consistent(rs);
    REQUIRE(p.has_value() == q.has_value());
    if (!p) continue;
    REQUIRE(p->size() == q->size());
    for (std::size_t k = 0; k < p->size(); ++k) CHECK(texts((*p)[k]) == texts((*q)[k]));
  }
}

TEST_CASE("property: tolerance is monotone") {
  std::mt19937 rng(6);
  testing::FormulaGenerator gen(9, {"A", "B", "C"}, false, false);
  auto random_rule = [&] {
    for (;;) {
      const Formula a = gen(1);
      if (satisfiable(a, {"A", "B", "C"})) return ConditionalRule(a, gen(1));
    }
  };
  for (int i = 0; i < 200; ++i) {
    const ConditionalRule r = random_rule();
    std::vector<ConditionalRule> big;
    for (int k = 0; k < 4; ++k) big.push_back(random_rule());
    std::vector<ConditionalRule> small;
    for (const auto& x : big) {
      if (rng() % 2) small.push_back(x);
    }
    if (tolerated(r, big)) CHECK(tolerated(r, small));
  }
}

TEST_CASE("literal battery") {
  const auto battery = literal_battery({"A", "E", "S"});
  CHECK(battery.size() == 24);
  CHECK(texts(battery).front() == "A & E => S");
  auto all = texts(battery);
  CHECK(std::unique(all.begin(), all.end()) == all.end());
  CHECK(std::count(all.begin(), all.end(), "A & S => ~E") == 1);
  CHECK_THROWS_AS(literal_battery({"A", "B"}), InputError);
}

TEST_CASE("crosscheck on the student theory") {
  const ConditionalKB kb = ConditionalKB::parse(testing::kStudentKb);
  std::vector<CrosscheckRow> rows;
  for (const auto& q : {rule("S & A => ~E"), rule("S & A => E"), rule("A => E")}) rows.push_back(crosscheck(kb, q));
  CHECK(rows[0].co_star);
  CHECK(rows[0].epsilon);
  CHECK(!rows[1].co_star);
  CHECK(rows[1].co_star_countermodel.has_value());
  for (const auto& r : rows) CHECK(r.agree());
  const std::string table = format_crosscheck(rows);
  CHECK(table.find("S & A => ~E") != std::string::npos);
  CHECK(table.rfind("query", 0) == 0);

  const auto clash = crosscheck(ConditionalKB::parse("A => B\nA => ~B\n"), rule("B => A"));
  CHECK(!clash.theory_consistent);
  CHECK(!clash.co_star_models);
  CHECK(clash.co_models);
  CHECK(clash.agree());
}
