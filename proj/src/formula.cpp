#include "colog/formula.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace colog {

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Atom: return "Atom";
    case Kind::Truth: return "Truth";
    case Kind::Falsity: return "Falsity";
    case Kind::Not: return "Not";
    case Kind::And: return "And";
    case Kind::Or: return "Or";
    case Kind::Implies: return "Implies";
    case Kind::Iff: return "Iff";
    case Kind::Box: return "Box";
    case Kind::IBox: return "IBox";
    case Kind::Dia: return "Dia";
    case Kind::IDia: return "IDia";
    case Kind::AllBox: return "AllBox";
    case Kind::AllDia: return "AllDia";
    case Kind::Belief: return "Belief";
    case Kind::OnlyKnow: return "OnlyKnow";
    case Kind::Cond: return "Cond";
  }
  return "?";
}

int arity(Kind k) {
  switch (k) {
    case Kind::Atom:
    case Kind::Truth:
    case Kind::Falsity:
      return 0;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
    case Kind::Cond:
      return 2;
    default:
      return 1;
  }
}

bool is_boolean(Kind k) {
  switch (k) {
    case Kind::Truth:
    case Kind::Falsity:
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      return true;
    default:
      return false;
  }
}

Formula::Formula() : Formula(make_constant(Kind::Truth)) {}

Formula Formula::make_atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::make_constant(Kind k) {
  assert(k == Kind::Truth || k == Kind::Falsity);
  // Shared singletons; Formula() would recurse otherwise.
  static const auto truth = std::make_shared<const Node>(Node{Kind::Truth, {}, {}, {}, 0, 1});
  static const auto falsity = std::make_shared<const Node>(Node{Kind::Falsity, {}, {}, {}, 0, 1});
  return Formula(k == Kind::Truth ? truth : falsity);
}

Formula Formula::make_unary(Kind k, Formula f) {
  assert(arity(k) == 1);
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->depth = f.depth() + 1;
  n->size = f.size() + 1;
  n->lhs = std::make_shared<const Formula>(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::make_binary(Kind k, Formula f, Formula g) {
  assert(arity(k) == 2);
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->depth = std::max(f.depth(), g.depth()) + 1;
  n->size = f.size() + g.size() + 1;
  n->lhs = std::make_shared<const Formula>(std::move(f));
  n->rhs = std::make_shared<const Formula>(std::move(g));
  return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (arity(a.kind())) {
    case 0: return a.name() == b.name();
    case 1: return a.arg() == b.arg();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (arity(a.kind())) {
    case 0: return a.name() <=> b.name();
    case 1: return a.arg() <=> b.arg();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

Formula atom(std::string name) { return Formula::make_atom(std::move(name)); }
Formula top() { return Formula::make_constant(Kind::Truth); }
Formula bottom() { return Formula::make_constant(Kind::Falsity); }
Formula neg(Formula f) { return Formula::make_unary(Kind::Not, std::move(f)); }
Formula conj(Formula f, Formula g) { return Formula::make_binary(Kind::And, std::move(f), std::move(g)); }
Formula disj(Formula f, Formula g) { return Formula::make_binary(Kind::Or, std::move(f), std::move(g)); }
Formula implies(Formula f, Formula g) { return Formula::make_binary(Kind::Implies, std::move(f), std::move(g)); }
Formula iff(Formula f, Formula g) { return Formula::make_binary(Kind::Iff, std::move(f), std::move(g)); }
Formula box(Formula f) { return Formula::make_unary(Kind::Box, std::move(f)); }
Formula ibox(Formula f) { return Formula::make_unary(Kind::IBox, std::move(f)); }
Formula dia(Formula f) { return Formula::make_unary(Kind::Dia, std::move(f)); }
Formula idia(Formula f) { return Formula::make_unary(Kind::IDia, std::move(f)); }
Formula allbox(Formula f) { return Formula::make_unary(Kind::AllBox, std::move(f)); }
Formula alldia(Formula f) { return Formula::make_unary(Kind::AllDia, std::move(f)); }
Formula belief(Formula f) { return Formula::make_unary(Kind::Belief, std::move(f)); }
Formula onlyknow(Formula f) { return Formula::make_unary(Kind::OnlyKnow, std::move(f)); }
Formula cond(Formula f, Formula g) { return Formula::make_binary(Kind::Cond, std::move(f), std::move(g)); }

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (arity(f.kind())) {
    case 0:
      if (f.kind() == Kind::Atom) out.insert(f.name());
      break;
    case 1:
      collect_atoms(f.arg(), out);
      break;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

template <class Pred>
bool all_nodes(const Formula& f, Pred pred) {
  if (!pred(f.kind())) return false;
  switch (arity(f.kind())) {
    case 0: return true;
    case 1: return all_nodes(f.arg(), pred);
    default: return all_nodes(f.lhs(), pred) && all_nodes(f.rhs(), pred);
  }
}

// Builders over arguments that are already in the core fragment.
Formula core_dia(Formula f) { return neg(box(neg(std::move(f)))); }
Formula core_idia(Formula f) { return neg(ibox(neg(std::move(f)))); }
Formula core_allbox(const Formula& f) { return conj(box(f), ibox(f)); }
Formula core_alldia(const Formula& f) { return disj(core_dia(f), core_idia(f)); }

}  // namespace

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

bool is_propositional(const Formula& f) {
  return all_nodes(f, [](Kind k) { return k == Kind::Atom || is_boolean(k); });
}

bool is_core(const Formula& f) {
  return all_nodes(f, [](Kind k) {
    return k == Kind::Atom || is_boolean(k) || k == Kind::Box || k == Kind::IBox;
  });
}

Formula desugar(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Truth:
    case Kind::Falsity:
      return f;
    case Kind::Not: return neg(desugar(f.arg()));
    case Kind::Box: return box(desugar(f.arg()));
    case Kind::IBox: return ibox(desugar(f.arg()));
    case Kind::And: return conj(desugar(f.lhs()), desugar(f.rhs()));
    case Kind::Or: return disj(desugar(f.lhs()), desugar(f.rhs()));
    case Kind::Implies: return implies(desugar(f.lhs()), desugar(f.rhs()));
    case Kind::Iff: return iff(desugar(f.lhs()), desugar(f.rhs()));
    case Kind::Dia: return core_dia(desugar(f.arg()));
    case Kind::IDia: return core_idia(desugar(f.arg()));
    case Kind::AllBox: return core_allbox(desugar(f.arg()));
    case Kind::AllDia: return core_alldia(desugar(f.arg()));
    case Kind::Belief: return core_alldia(box(desugar(f.arg())));
    case Kind::OnlyKnow: {
      Formula kb = desugar(f.arg());
      return core_allbox(implies(kb, conj(box(kb), ibox(neg(kb)))));
    }
    case Kind::Cond: {
      Formula a = desugar(f.lhs());
      Formula b = desugar(f.rhs());
      return disj(core_allbox(neg(a)), core_alldia(conj(a, box(implies(a, b)))));
    }
  }
  return f;
}

namespace {

// Binding strength used by render; larger binds tighter.
int precedence(Kind k) {
  switch (k) {
    case Kind::Cond: return 1;
    case Kind::Iff: return 2;
    case Kind::Implies: return 3;
    case Kind::Or: return 4;
    case Kind::And: return 5;
    case Kind::Not:
    case Kind::Box:
    case Kind::IBox:
    case Kind::Dia:
    case Kind::IDia:
    case Kind::AllBox:
    case Kind::AllDia:
      return 6;
    default:
      return 7;
  }
}

std::string_view prefix_token(Kind k) {
  switch (k) {
    case Kind::Not: return "~";
    case Kind::Box: return "[]";
    case Kind::IBox: return "[i]";
    case Kind::Dia: return "<>";
    case Kind::IDia: return "<i>";
    case Kind::AllBox: return "[*]";
    case Kind::AllDia: return "<*>";
    default: return "";
  }
}

std::string_view infix_token(Kind k) {
  switch (k) {
    case Kind::Cond: return " => ";
    case Kind::Iff: return " <=> ";
    case Kind::Implies: return " -> ";
    case Kind::Or: return " | ";
    case Kind::And: return " & ";
    default: return "";
  }
}

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  const Kind k = f.kind();
  switch (k) {
    case Kind::Atom: out += f.name(); return;
    case Kind::Truth: out += "true"; return;
    case Kind::Falsity: out += "false"; return;
    case Kind::Belief:
    case Kind::OnlyKnow:
      out += k == Kind::Belief ? "B(" : "O(";
      render_into(f.arg(), out);
      out += ')';
      return;
    default:
      break;
  }
  const int p = precedence(k);
  if (arity(k) == 1) {
    out += prefix_token(k);
    render_operand(f.arg(), precedence(f.arg().kind()) < p, out);
    return;
  }
  // -> associates to the right, every other infix operator to the left.
  const bool right_assoc = k == Kind::Implies;
  const int lp = precedence(f.lhs().kind());
  const int rp = precedence(f.rhs().kind());
  render_operand(f.lhs(), right_assoc ? lp <= p : lp < p, out);
  out += infix_token(k);
  render_operand(f.rhs(), right_assoc ? rp < p : rp <= p, out);
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

}  // namespace colog
