#include "colog/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "colog/calculus.hpp"
#include "colog/defaults.hpp"
#include "colog/epsilon.hpp"
#include "colog/errors.hpp"
#include "colog/evaluate.hpp"
#include "colog/orderings.hpp"
#include "colog/parser.hpp"
#include "colog/search.hpp"

namespace colog::cli {

namespace {

// Usage or input problem; reported on stderr with exit code 2.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(path + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class Parse>
auto load(const std::string& path, Parse parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Failure(path + ": " + e.what());
  } catch (const Error& e) {
    throw Failure(path + ": " + e.what());
  }
}

Formula formula_arg(const std::string& flag, const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Failure(flag + " \"" + text + "\": " + e.what());
  }
}

ConditionalRule rule_arg(const std::string& flag, const std::string& text) {
  try {
    return ConditionalRule::parse(text);
  } catch (const Error& e) {
    throw Failure(flag + " \"" + text + "\": " + e.what());
  }
}

ModelClass class_arg(const std::string& s) { return s == "CO*" ? ModelClass::COStar : ModelClass::CO; }

// Report text: prose for people, key=value lines with --porcelain.
class Report {
 public:
  explicit Report(bool porcelain) : porcelain_(porcelain) {}

  void say(const std::string& text) {
    if (!porcelain_) s_ << text << '\n';
  }
  void kv(const std::string& key, const std::string& value) {
    if (porcelain_) s_ << key << '=' << value << '\n';
  }
  void block(const std::string& key, const std::string& text) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
      if (porcelain_) {
        s_ << key << '=' << l << '\n';
      } else {
        s_ << l << '\n';
      }
    }
  }

  std::string str() const { return s_.str(); }

 private:
  bool porcelain_;
  std::ostringstream s_;
};

struct Common {
  bool porcelain = false;
  std::string output;
  bool verify_witness = false;
  bool beyond_ceiling = false;
};

struct Bounds {
  std::string model_class = "CO";
  std::size_t atoms = 2;
  std::size_t multiplicity = 1;
};

void add_bounds(CLI::App* cmd, Bounds& b) {
  cmd->add_option("--class", b.model_class, "Model class")->check(CLI::IsMember({"CO", "CO*"}))->capture_default_str();
  cmd->add_option("--atoms", b.atoms, "Most atoms to enumerate over")->capture_default_str();
  cmd->add_option("--multiplicity", b.multiplicity, "Most copies of one valuation")->capture_default_str();
}

SearchBounds search_bounds(const Bounds& b, const Common& c) {
  SearchBounds s = SearchBounds::of(class_arg(b.model_class), b.atoms, b.multiplicity);
  s.allow_beyond_ceiling = c.beyond_ceiling;
  return s;
}

std::string bounds_text(const Bounds& b, std::size_t checked) {
  return std::to_string(checked) + " " + b.model_class + " models, atoms <= " + std::to_string(b.atoms) +
         ", multiplicity <= " + std::to_string(b.multiplicity);
}

std::string class_list(const std::vector<ClassId>& ids, const Vocabulary& vocab) {
  std::string out;
  for (ClassId c : ids) out += (out.empty() ? "{" : " {") + TruthSet(c, vocab.size()).canonical_dnf(vocab) + "}";
  return out;
}

void verify_failed() { throw Failure("witness failed re-verification"); }

int report_search(Report& r, const Verdict& v, const Bounds& b, const Common& c,
                  const std::vector<Formula>& premises, const Formula& goal, Consequence mode) {
  r.kv("status", std::string(status_name(v.status)));
  r.kv("models_checked", std::to_string(v.models_checked));
  if (v.holds()) {
    r.say("valid-within-bounds: no countermodel among " + bounds_text(b, v.models_checked));
    return kYes;
  }
  const Witness& w = *v.witness;
  r.say("countermodel: fails at world " + std::to_string(w.world));
  r.kv("world", std::to_string(w.world));
  r.block("model", to_text(w.model));
  if (c.verify_witness) {
    const RankedModel again = parse_model(to_text(w.model));
    bool ok = !evaluate(again, w.world, goal);
    for (const Formula& p : premises) {
      ok = ok && (mode == Consequence::Global ? holds_globally(again, p) : evaluate(again, w.world, p));
    }
    if (!ok) verify_failed();
    r.say("witness re-verified");
    r.kv("witness", "verified");
  }
  return kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reasoning with the ranked modal logics CO and CO*", "colog"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--porcelain", common.porcelain, "Line-oriented key=value output");
  app.add_option("--output", common.output, "Write the report to a file");
  app.add_flag("--verify-witness", common.verify_witness, "Reload and re-check printed countermodels");
  app.add_flag("--beyond-ceiling", common.beyond_ceiling, "Allow enumeration beyond the default atom ceiling");

  std::function<int(Report&)> action;

  // eval
  std::string model_path, formula_text;
  std::optional<std::size_t> world;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula in a model");
  eval_cmd->add_option("--model", model_path, "Model file")->required();
  eval_cmd->add_option("--formula", formula_text, "Formula")->required();
  eval_cmd->add_option("--world", world, "World index");
  eval_cmd->callback([&] {
    action = [&](Report& r) {
      const RankedModel m = load(model_path, parse_model);
      const Formula f = formula_arg("--formula", formula_text);
      const WorldSet t = [&] {
        try {
          return Evaluator(m).truth(f);
        } catch (const Error& e) {
          throw Failure(std::string("--formula: ") + e.what());
        }
      }();
      if (world) {
        if (*world >= m.size()) throw Failure("--world " + std::to_string(*world) + " is out of range");
        const bool v = t[*world] != 0;
        r.say(std::string(v ? "true" : "false") + " at world " + std::to_string(*world));
        r.kv("result", v ? "true" : "false");
        r.kv("world", std::to_string(*world));
        return v ? kYes : kNo;
      }
      std::string falses;
      for (std::size_t w = 0; w < m.size(); ++w) {
        if (!t[w]) falses += (falses.empty() ? "" : " ") + std::to_string(w);
      }
      r.kv("result", falses.empty() ? "true" : "false");
      if (falses.empty()) {
        r.say("true at all worlds");
        return kYes;
      }
      r.say("false at worlds " + falses);
      r.kv("false_worlds", falses);
      return kNo;
    };
  });

  // valid
  Bounds valid_bounds;
  auto* valid_cmd = app.add_subcommand("valid", "Search bounded models for a countermodel");
  valid_cmd->add_option("--formula", formula_text, "Formula")->required();
  add_bounds(valid_cmd, valid_bounds);
  valid_cmd->callback([&] {
    action = [&](Report& r) {
      const Formula f = formula_arg("--formula", formula_text);
      const Verdict v = find_countermodel({}, f, search_bounds(valid_bounds, common));
      return report_search(r, v, valid_bounds, common, {}, f, Consequence::Global);
    };
  });

  // entail
  Bounds entail_bounds;
  std::vector<std::string> premise_texts;
  std::string goal_text;
  bool local = false;
  auto* entail_cmd = app.add_subcommand("entail", "Check consequence from premises");
  entail_cmd->add_option("--premise", premise_texts, "Premise (repeatable)");
  entail_cmd->add_option("--goal", goal_text, "Goal formula")->required();
  entail_cmd->add_flag("--local", local, "Truth-preservation at each world instead of global consequence");
  add_bounds(entail_cmd, entail_bounds);
  entail_cmd->callback([&] {
    action = [&](Report& r) {
      std::vector<Formula> premises;
      for (const auto& p : premise_texts) premises.push_back(formula_arg("--premise", p));
      const Formula goal = formula_arg("--goal", goal_text);
      const Consequence mode = local ? Consequence::Local : Consequence::Global;
      const Verdict v = find_countermodel(premises, goal, search_bounds(entail_bounds, common), mode);
      return report_search(r, v, entail_bounds, common, premises, goal, mode);
    };
  });

  // default-query
  Bounds dq_bounds{"CO*", 3, 1};
  std::string kb_path, query_text, prefer_text, over_text;
  auto* dq_cmd = app.add_subcommand("default-query", "Query a conditional knowledge base");
  dq_cmd->add_option("--kb", kb_path, "Knowledge base file")->required();
  auto* q_opt = dq_cmd->add_option("--query", query_text, "Conditional query 'alpha => beta'");
  auto* prefer_opt = dq_cmd->add_option("--prefer", prefer_text, "Strictly more plausible sentence");
  auto* over_opt = dq_cmd->add_option("--over", over_text, "Less plausible sentence");
  prefer_opt->needs(over_opt);
  over_opt->needs(prefer_opt);
  q_opt->excludes(prefer_opt);
  add_bounds(dq_cmd, dq_bounds);
  dq_cmd->callback([&] {
    if (q_opt->count() == 0 && prefer_opt->count() == 0) throw CLI::ValidationError("--query or --prefer/--over is required");
    action = [&](Report& r) {
      const ConditionalKB kb = load(kb_path, ConditionalKB::parse);
      QueryOptions opts;
      opts.model_class = class_arg(dq_bounds.model_class);
      opts.multiplicity = dq_bounds.multiplicity;
      opts.allow_beyond_ceiling = common.beyond_ceiling;
      std::vector<Formula> all;
      for (const auto& rule : kb.rules()) all.push_back(rule.formula());
      std::optional<ConditionalRule> query;
      Formula prefer = top(), over = top();
      if (!query_text.empty()) {
        query = rule_arg("--query", query_text);
        all.push_back(query->formula());
      } else {
        prefer = formula_arg("--prefer", prefer_text);
        over = formula_arg("--over", over_text);
        all.push_back(prefer);
        all.push_back(over);
      }
      const std::size_t n = vocabulary_of(all).size();
      if (n > dq_bounds.atoms) {
        throw BoundsError("query uses " + std::to_string(n) + " atoms, bound is " + std::to_string(dq_bounds.atoms));
      }
      const Verdict v = query ? kb_entails_conditional(kb, *query, opts) : kb_entails_plausibility(kb, prefer, over, opts);
      r.kv("status", v.holds() ? "entailed" : "not-entailed");
      r.kv("models_checked", std::to_string(v.models_checked));
      if (v.holds()) {
        r.say("entailed: holds in every model of the knowledge base among " + bounds_text(dq_bounds, v.models_checked));
        return kYes;
      }
      r.say("not entailed: countermodel");
      r.block("model", to_text(v.witness->model));
      if (common.verify_witness) {
        const RankedModel again = parse_model(to_text(v.witness->model));
        bool ok = true;
        for (const auto& rule : kb.rules()) ok = ok && conditional_holds(again, rule.antecedent(), rule.consequent());
        if (query) {
          ok = ok && !conditional_holds(again, query->antecedent(), query->consequent());
        } else {
          ok = ok && !(plausibility_leq(again, prefer, over) && !plausibility_leq(again, over, prefer));
        }
        if (!ok) verify_failed();
        r.say("witness re-verified");
        r.kv("witness", "verified");
      }
      return kNo;
    };
  });

  // ordering
  bool beliefs = false;
  auto* ord_cmd = app.add_subcommand("ordering", "Print the plausibility ordering of a model");
  ord_cmd->add_option("--model", model_path, "Model file")->required();
  ord_cmd->add_flag("--beliefs", beliefs, "Also list believed and completely necessary classes");
  ord_cmd->callback([&] {
    action = [&](Report& r) {
      const RankedModel m = load(model_path, parse_model);
      const QualitativeOrdering ord = extract_ordering(m);
      r.block("ordering", to_text(ord));
      if (beliefs) {
        const ClassSet k = belief_set(ord);
        const ClassSet certain = completely_necessary(ord);
        const std::string kt = class_list({k.begin(), k.end()}, m.vocabulary());
        const std::string ct = class_list({certain.begin(), certain.end()}, m.vocabulary());
        r.say("believed: " + kt);
        r.say("completely necessary: " + ct);
        r.kv("believed", kt);
        r.kv("completely_necessary", ct);
      }
      return kYes;
    };
  });

  // postulates
  std::string post_class;
  auto* post_cmd = app.add_subcommand("postulates", "Check N1-N6 and E1-E5 on a model's ordering");
  post_cmd->add_option("--model", model_path, "Model file")->required();
  post_cmd->add_option("--class", post_class, "Model class (default: CO* iff every valuation occurs)")
      ->check(CLI::IsMember({"CO", "CO*"}));
  post_cmd->callback([&] {
    action = [&](Report& r) {
      const RankedModel m = load(model_path, parse_model);
      const bool co_star = post_class.empty() ? m.is_co_star() : post_class == "CO*";
      const QualitativeOrdering ord = extract_ordering(m);
      PostulateReport all = check_necessity_postulates(ord);
      const PostulateReport e = check_entrenchment_postulates(ord, belief_set(ord), co_star);
      all.results.insert(all.results.end(), e.results.begin(), e.results.end());
      for (const auto& res : all.results) {
        const std::string witness = class_list(res.counterexample, m.vocabulary());
        r.say(res.name + (res.passed ? " pass" : " fail" + (witness.empty() ? "" : ": " + witness)));
        r.kv(res.name, res.passed ? "pass" : "fail" + (witness.empty() ? "" : " " + witness));
      }
      return all.all_passed() ? kYes : kNo;
    };
  });

  // rebuild
  std::string ordering_path;
  auto* rebuild_cmd = app.add_subcommand("rebuild", "Rebuild a model from an ordering by cuts");
  auto* rb_model = rebuild_cmd->add_option("--model", model_path, "Model whose ordering is rebuilt");
  auto* rb_ord = rebuild_cmd->add_option("--ordering", ordering_path, "Ordering file");
  rb_model->excludes(rb_ord);
  rebuild_cmd->callback([&] {
    if (rb_model->count() + rb_ord->count() != 1) throw CLI::ValidationError("exactly one of --model or --ordering is required");
    action = [&](Report& r) {
      const QualitativeOrdering ord = ordering_path.empty() ? extract_ordering(load(model_path, parse_model))
                                                            : load(ordering_path, parse_ordering);
      try {
        const RankedModel m = model_from_ordering(ord);
        r.kv("status", "rebuilt");
        r.block("model", to_text(m));
        return kYes;
      } catch (const InputError& e) {
        r.say(std::string("not representable: ") + e.what());
        r.kv("status", "not-representable");
        r.kv("reason", e.what());
        return kNo;
      }
    };
  });

  // only-knows
  std::string kb_formula_text;
  auto* ok_cmd = app.add_subcommand("only-knows", "Check O(kb) in a model");
  ok_cmd->add_option("--model", model_path, "Model file")->required();
  ok_cmd->add_option("--kb-formula", kb_formula_text, "Propositional knowledge base")->required();
  ok_cmd->callback([&] {
    action = [&](Report& r) {
      const RankedModel m = load(model_path, parse_model);
      const Formula kb = formula_arg("--kb-formula", kb_formula_text);
      bool v = false;
      try {
        v = only_knows(m, kb);
      } catch (const Error& e) {
        throw Failure(std::string("--kb-formula: ") + e.what());
      }
      r.say(v ? "true: the model only knows the formula" : "false");
      r.kv("result", v ? "true" : "false");
      return v ? kYes : kNo;
    };
  });

  // proof-check
  std::string proof_path;
  std::vector<std::string> proof_premises;
  auto* proof_cmd = app.add_subcommand("proof-check", "Verify a derivation");
  proof_cmd->add_option("--proof", proof_path, "Proof file")->required();
  proof_cmd->add_option("--premise", proof_premises, "Premise (repeatable)");
  proof_cmd->callback([&] {
    action = [&](Report& r) {
      const auto lines = load(proof_path, parse_proof);
      std::vector<Formula> premises;
      for (const auto& p : proof_premises) premises.push_back(formula_arg("--premise", p));
      const ProofCheck check = verify_proof(premises, lines);
      if (check.ok) {
        r.say("accepted: " + std::to_string(lines.size()) + " lines");
        r.kv("status", "accepted");
        r.kv("lines", std::to_string(lines.size()));
        return kYes;
      }
      r.say("rejected: " + check.message);
      r.kv("status", "rejected");
      r.kv("line", std::to_string(check.failed_line));
      r.kv("reason", check.message);
      return kNo;
    };
  });

  // crosscheck
  std::vector<std::string> cc_queries;
  bool battery = false;
  std::size_t random_count = 0;
  std::uint32_t seed = 1;
  std::size_t cc_multiplicity = 1;
  std::string cc_kb;
  auto* cc_cmd = app.add_subcommand("crosscheck", "Compare CO, CO* and epsilon-entailment verdicts");
  cc_cmd->add_option("--kb", cc_kb, "Knowledge base file");
  cc_cmd->add_option("--query", cc_queries, "Conditional query (repeatable)");
  cc_cmd->add_flag("--battery", battery, "All 24 literal queries over the KB's three atoms");
  cc_cmd->add_option("--random", random_count, "Also run N random theory/query instances over A B C");
  cc_cmd->add_option("--seed", seed, "Seed for --random")->capture_default_str();
  cc_cmd->add_option("--multiplicity", cc_multiplicity, "Most copies of one valuation")->capture_default_str();
  cc_cmd->callback([&] {
    if ((!cc_queries.empty() || battery) && cc_kb.empty()) throw CLI::ValidationError("--query and --battery need --kb");
    if (cc_queries.empty() && !battery && random_count == 0) {
      throw CLI::ValidationError("give --query, --battery or --random");
    }
    action = [&](Report& r) {
      QueryOptions opts;
      opts.multiplicity = cc_multiplicity;
      opts.allow_beyond_ceiling = common.beyond_ceiling;
      std::vector<CrosscheckRow> rows;
      if (!cc_kb.empty()) {
        const ConditionalKB kb = load(cc_kb, ConditionalKB::parse);
        std::vector<ConditionalRule> queries;
        for (const auto& q : cc_queries) queries.push_back(rule_arg("--query", q));
        if (battery) {
          try {
            for (auto& q : literal_battery(kb.vocabulary())) queries.push_back(std::move(q));
          } catch (const InputError& e) {
            throw Failure(cc_kb + ": " + e.what());
          }
        }
        for (const auto& q : queries) rows.push_back(crosscheck(kb, q, opts));
      }
      for (const auto& inst : random_instances(random_count, seed, {"A", "B", "C"})) {
        CrosscheckRow row = crosscheck(inst.kb, inst.query, opts);
        std::string theory;
        for (const auto& rule : inst.kb.rules()) theory += (theory.empty() ? "" : "; ") + rule.text();
        row.query = "[" + theory + "] " + row.query;
        rows.push_back(std::move(row));
      }
      std::size_t agree = 0, diverge = 0;
      for (const auto& row : rows) {
        agree += row.agree() ? 1 : 0;
        diverge += row.co_diverges() ? 1 : 0;
      }
      r.block("row", format_crosscheck(rows));
      const std::string summary = std::to_string(agree) + "/" + std::to_string(rows.size()) +
                                  " CO*/epsilon agreements, " + std::to_string(diverge) + " CO divergences";
      r.say(summary);
      r.kv("agree", std::to_string(agree));
      r.kv("total", std::to_string(rows.size()));
      r.kv("co_divergences", std::to_string(diverge));
      return agree == rows.size() ? kYes : kNo;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "colog: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) err << "run 'colog " << app.get_subcommands().front()->get_name() << " --help' for usage\n";
    return kUsage;
  }

  Report report(common.porcelain);
  int code = kUsage;
  try {
    code = action(report);
  } catch (const Failure& e) {
    err << "colog: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "colog: " << e.what() << '\n';
    return kUsage;
  }
  if (!common.output.empty()) {
    std::ofstream f(common.output, std::ios::binary);
    if (!f) {
      err << "colog: " << common.output << ": cannot write file\n";
      return kUsage;
    }
    f << report.str();
  } else {
    out << report.str();
  }
  return code;
}

}  // namespace colog::cli
