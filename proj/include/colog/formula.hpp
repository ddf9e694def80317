#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace colog {

enum class Kind {
  Atom,
  Truth,
  Falsity,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Box,       // []   accessible (at least as plausible) worlds
  IBox,      // [i]  inaccessible (strictly less plausible) worlds
  Dia,       // <>
  IDia,      // <i>
  AllBox,    // [*]  every world
  AllDia,    // <*>  some world
  Belief,    // B(.)
  OnlyKnow,  // O(.)
  Cond,      // =>
};

std::string_view kind_name(Kind k);

int arity(Kind k);

// Nodes that are classical connectives or constants.
bool is_boolean(Kind k);

// Immutable formula tree with shared subterms. Copies are cheap.
class Formula {
 public:
  Formula();  // `true`

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }
  // Operand of a unary node.
  const Formula& arg() const { return *node_->lhs; }

  std::size_t depth() const { return node_->depth; }
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

  static Formula make_atom(std::string name);
  static Formula make_constant(Kind k);
  static Formula make_unary(Kind k, Formula f);
  static Formula make_binary(Kind k, Formula f, Formula g);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
    std::size_t depth = 0;
    std::size_t size = 1;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

Formula atom(std::string name);
Formula top();
Formula bottom();
Formula neg(Formula f);
Formula conj(Formula f, Formula g);
Formula disj(Formula f, Formula g);
Formula implies(Formula f, Formula g);
Formula iff(Formula f, Formula g);
Formula box(Formula f);
Formula ibox(Formula f);
Formula dia(Formula f);
Formula idia(Formula f);
Formula allbox(Formula f);
Formula alldia(Formula f);
Formula belief(Formula f);
Formula onlyknow(Formula f);
Formula cond(Formula f, Formula g);

// Atom names occurring in f.
std::set<std::string> atoms(const Formula& f);

// No modal, belief, only-knowing or conditional nodes.
bool is_propositional(const Formula& f);

// Only Atom, Truth, Falsity, Not, Implies, Box, IBox, plus the retained
// boolean primitives And, Or, Iff.
bool is_core(const Formula& f);

// Rewrites every derived modality into the []/[i] core. Boolean connectives
// are kept as primitives.
Formula desugar(const Formula& f);

// Canonical concrete syntax; parse(render(f)) == f.
std::string render(const Formula& f);

}  // namespace colog
