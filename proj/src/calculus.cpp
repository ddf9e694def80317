#include "colog/calculus.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "colog/errors.hpp"
#include "colog/parser.hpp"
#include "colog/valuation.hpp"

namespace colog {

namespace {

bool lp_side_condition(const Binding& b) {
  const Formula& body = b.at("A");
  if (!is_propositional(body)) return false;
  const auto names = atoms(body);
  return satisfiable(body, Vocabulary(names.begin(), names.end()));
}

// Collects maximal non-boolean subformulas, deduplicated structurally.
void collect_opaque(const Formula& f, std::vector<Formula>& out) {
  switch (f.kind()) {
    case Kind::Truth:
    case Kind::Falsity:
      return;
    case Kind::Not:
      collect_opaque(f.arg(), out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      collect_opaque(f.lhs(), out);
      collect_opaque(f.rhs(), out);
      return;
    default:
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
}

bool eval_opaque(const Formula& f, const std::vector<Formula>& opaque, std::uint64_t bits) {
  switch (f.kind()) {
    case Kind::Truth: return true;
    case Kind::Falsity: return false;
    case Kind::Not: return !eval_opaque(f.arg(), opaque, bits);
    case Kind::And: return eval_opaque(f.lhs(), opaque, bits) && eval_opaque(f.rhs(), opaque, bits);
    case Kind::Or: return eval_opaque(f.lhs(), opaque, bits) || eval_opaque(f.rhs(), opaque, bits);
    case Kind::Implies:
      return !eval_opaque(f.lhs(), opaque, bits) || eval_opaque(f.rhs(), opaque, bits);
    case Kind::Iff: return eval_opaque(f.lhs(), opaque, bits) == eval_opaque(f.rhs(), opaque, bits);
    default: {
      const auto i = static_cast<std::size_t>(std::find(opaque.begin(), opaque.end(), f) - opaque.begin());
      return ((bits >> i) & 1u) != 0;
    }
  }
}

bool same(const Formula& a, const Formula& b) { return a == b || desugar(a) == desugar(b); }

bool axiom_justifies(const Formula& f, AxiomId id, const std::optional<Binding>& binding,
                     std::string& why) {
  const Schema& s = axiom_schema(id);
  std::optional<Binding> b;
  if (binding) {
    for (const auto& mv : s.metavariables()) {
      if (!binding->count(mv)) {
        why = "binding lacks ?" + mv;
        return false;
      }
    }
    if (!same(s.instantiate(*binding), f)) {
      why = "formula is not the instance of " + std::string(axiom_name(id)) + " under the binding";
      return false;
    }
    b = binding;
  } else {
    b = s.match(f);
    if (!b) b = Schema::parse(render(desugar(s.pattern()))).match(desugar(f));
    if (!b) {
      why = "formula is not an instance of " + std::string(axiom_name(id));
      return false;
    }
  }
  if (id == AxiomId::LP && !lp_side_condition(*b)) {
    why = "LP requires a satisfiable propositional body";
    return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_index(std::string_view s, std::size_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
  return r.ec == std::errc{} && r.ptr == s.data() + s.size();
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

std::optional<AxiomMatch> match_axiom(const Formula& f) {
  for (AxiomId id : all_axioms()) {
    auto b = axiom_schema(id).match(f);
    if (!b) continue;
    if (id == AxiomId::LP && !lp_side_condition(*b)) continue;
    return AxiomMatch{id, std::move(*b)};
  }
  return std::nullopt;
}

bool check_tautology(const Formula& f) {
  const Formula d = desugar(f);
  std::vector<Formula> opaque;
  collect_opaque(d, opaque);
  if (opaque.size() > 24) throw BoundsError("tautology check over more than 24 opaque subformulas");
  const std::uint64_t n = std::uint64_t{1} << opaque.size();
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    if (!eval_opaque(d, opaque, bits)) return false;
  }
  return true;
}

ProofCheck verify_proof(const std::vector<Formula>& premises, const std::vector<ProofLine>& lines) {
  std::vector<bool> tainted;
  tainted.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t no = i + 1;
    const ProofLine& line = lines[i];
    const Justification& j = line.justification;
    auto fail = [&](const std::string& msg) {
      return ProofCheck{false, no, "line " + std::to_string(no) + ": " + msg};
    };
    auto cited = [&](std::size_t k) { return k >= 1 && k < no; };
    bool taint = false;
    switch (j.rule) {
      case Justification::Rule::Axiom: {
        std::string why;
        if (!axiom_justifies(line.formula, j.axiom, j.binding, why)) return fail(why);
        break;
      }
      case Justification::Rule::Tautology:
        if (!check_tautology(line.formula)) return fail("not a tautology instance");
        break;
      case Justification::Rule::Premise:
        if (std::none_of(premises.begin(), premises.end(),
                         [&](const Formula& p) { return same(p, line.formula); })) {
          return fail("not among the premises");
        }
        taint = true;
        break;
      case Justification::Rule::ModusPonens: {
        if (!cited(j.first) || !cited(j.second)) return fail("mp cites a line that does not precede it");
        const Formula imp = desugar(lines[j.first - 1].formula);
        if (imp.kind() != Kind::Implies) {
          return fail("mp: line " + std::to_string(j.first) + " is not an implication");
        }
        if (imp.lhs() != desugar(lines[j.second - 1].formula)) {
          return fail("mp: line " + std::to_string(j.second) + " is not the antecedent of line " +
                      std::to_string(j.first));
        }
        if (imp.rhs() != desugar(line.formula)) return fail("mp: formula is not the consequent");
        taint = tainted[j.first - 1] || tainted[j.second - 1];
        break;
      }
      case Justification::Rule::Necessitation:
        if (!cited(j.first)) return fail("nec cites a line that does not precede it");
        if (tainted[j.first - 1]) {
          return fail("nec applied to line " + std::to_string(j.first) + ", which depends on a premise");
        }
        if (!same(allbox(lines[j.first - 1].formula), line.formula)) {
          return fail("nec: formula is not [*] of line " + std::to_string(j.first));
        }
        break;
    }
    tainted.push_back(taint);
  }
  return {};
}

std::vector<ProofLine> parse_proof(std::string_view text) {
  std::vector<ProofLine> out;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& msg, std::size_t pos = 0) {
      return ParseError("line " + std::to_string(lineno) + ": " + msg, pos, lineno);
    };

    const auto dot = line.find('.');
    std::size_t number = 0;
    if (dot == std::string_view::npos || !parse_index(line.substr(0, dot), number)) {
      throw fail("expected 'N. <formula> ; <justification>'");
    }
    if (number != out.size() + 1) {
      throw fail("expected step " + std::to_string(out.size() + 1) + ", found " + std::to_string(number));
    }
    const auto semi = line.rfind(';');
    if (semi == std::string_view::npos || semi < dot) throw fail("missing ';' before the justification");

    const std::string_view ftext = line.substr(dot + 1, semi - dot - 1);
    Formula f = top();
    try {
      f = parse(ftext);
    } catch (const ParseError& e) {
      const std::size_t offset = static_cast<std::size_t>(ftext.data() - raw.data());
      throw fail(e.what(), offset + e.position());
    }

    const std::string_view just = trim(line.substr(semi + 1));
    const auto w = words(just);
    Justification j;
    std::size_t a = 0, b = 0;
    if (just == "taut") {
      j = Justification::tautology();
    } else if (just == "prem") {
      j = Justification::premise();
    } else if (w.size() == 3 && w[0] == "mp" && parse_index(w[1], a) && parse_index(w[2], b)) {
      j = Justification::mp(a, b);
    } else if (w.size() == 2 && w[0] == "nec" && parse_index(w[1], a)) {
      j = Justification::nec(a);
    } else if (just.starts_with("ax:")) {
      std::string_view rest = just.substr(3);
      const auto brace = rest.find('{');
      const auto id = axiom_from_name(trim(rest.substr(0, brace)));
      if (!id) throw fail("unknown axiom '" + std::string(trim(rest.substr(0, brace))) + "'");
      std::optional<Binding> binding;
      if (brace != std::string_view::npos) {
        if (rest.back() != '}') throw fail("unterminated binding");
        binding.emplace();
        std::string_view items = rest.substr(brace + 1, rest.size() - brace - 2);
        while (!trim(items).empty()) {
          const auto comma = items.find(',');
          const std::string_view item = items.substr(0, comma);
          const auto eq = item.find('=');
          if (eq == std::string_view::npos) throw fail("binding item without '='");
          std::string key(trim(item.substr(0, eq)));
          if (!key.empty() && key.front() == '?') key.erase(0, 1);
          try {
            binding->insert_or_assign(key, parse(item.substr(eq + 1)));
          } catch (const ParseError& e) {
            throw fail(std::string("in binding: ") + e.what());
          }
          if (comma == std::string_view::npos) break;
          items = items.substr(comma + 1);
        }
      }
      j = Justification::by_axiom(*id, std::move(binding));
    } else {
      throw fail("unknown justification '" + std::string(just) + "'");
    }
    out.push_back(ProofLine{std::move(f), std::move(j)});
  }
  return out;
}

std::string to_text(const ProofLine& line, std::size_t number) {
  std::string out = std::to_string(number) + ". " + render(line.formula) + " ; ";
  const Justification& j = line.justification;
  switch (j.rule) {
    case Justification::Rule::Axiom:
      out += "ax:" + std::string(axiom_name(j.axiom));
      if (j.binding) {
        out += "{";
        bool first = true;
        for (const auto& [k, v] : *j.binding) {
          out += (first ? "" : ",") + k + "=" + render(v);
          first = false;
        }
        out += "}";
      }
      break;
    case Justification::Rule::Tautology: out += "taut"; break;
    case Justification::Rule::Premise: out += "prem"; break;
    case Justification::Rule::ModusPonens:
      out += "mp " + std::to_string(j.first) + " " + std::to_string(j.second);
      break;
    case Justification::Rule::Necessitation: out += "nec " + std::to_string(j.first); break;
  }
  return out;
}

}  // namespace colog
