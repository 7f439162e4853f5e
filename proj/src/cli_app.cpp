#include "misere/cli_app.hpp"

#include "misere/cache.hpp"
#include "misere/invert.hpp"
#include "misere/notation.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <iostream>

namespace misere {

namespace {

using nlohmann::json;

constexpr int kExitDefinite = 0;
constexpr int kExitBounded = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct Options {
  int bound = 3;
  std::size_t budget = 1'000'000;
  int width = 2;
  bool assume_bounded = false;
  bool json_output = false;
  std::uint64_t seed = 0;
  std::string cache_dir;
};

struct Report {
  std::string command;
  std::string universe = "-";
  std::string verdict;
  std::optional<std::string> witness;
  std::optional<int> bound;
  json trace;  // array when present
  std::vector<std::string> assumptions;
  std::vector<std::string> lines;  // text-mode detail
  int exit_code = kExitDefinite;
};

void emit(const Report& rep, const Options& opt, Engine& eng, std::ostream& out, double wall_ms) {
  if (opt.json_output) {
    json j;
    j["command"] = rep.command;
    j["universe"] = rep.universe;
    j["verdict"] = rep.verdict;
    if (rep.witness) j["witness"] = *rep.witness;
    if (rep.bound) j["bound"] = *rep.bound;
    if (!rep.trace.is_null()) j["trace"] = rep.trace;
    if (!rep.assumptions.empty()) j["assumptions"] = rep.assumptions;
    out << j.dump() << "\n";
    return;
  }
  out << "command: " << rep.command << "\n";
  if (rep.universe != "-") out << "universe: " << rep.universe << "\n";
  for (const std::string& l : rep.lines) out << l << "\n";
  out << "verdict: " << rep.verdict << "\n";
  if (rep.witness) out << "witness: " << *rep.witness << "\n";
  if (rep.bound) out << "bound: " << *rep.bound << "\n";
  for (const std::string& a : rep.assumptions) out << "assumes: " << a << "\n";
  out << "budget-used: " << eng.nodes_created() << " nodes\n";
  out << "wall-time: " << wall_ms << " ms\n";
}

UniverseSpec make_universe(Engine& eng, const std::string& text, const Options& opt) {
  UniverseSpec u = parse_universe(eng, text);
  u.end_birthday_bound = opt.bound;
  u.node_budget = opt.budget;
  u.enum_width = opt.width;
  return u;
}

char winner_letter(Player p) { return p == Player::Left ? 'L' : 'R'; }

struct RelationSummary {
  std::string relation;  // "equiv" | "greater" | "less" | "incomparable"
  bool proven = true;
  int bound = 0;
  std::optional<AugId> witness;
};

RelationSummary summarize_relation(const TriVerdict& ab, const TriVerdict& ba) {
  RelationSummary s;
  auto note = [&](const TriVerdict& v) {
    if (v.kind == TriVerdict::Kind::BoundedTrue) {
      s.proven = false;
      s.bound = std::max(s.bound, v.bound);
    }
  };
  note(ab);
  note(ba);
  if (ab.non_false() && ba.non_false()) {
    s.relation = "equiv";
  } else if (ab.non_false()) {
    s.relation = "greater";
    s.witness = ba.witness;
  } else if (ba.non_false()) {
    s.relation = "less";
    s.witness = ab.witness;
  } else {
    s.relation = "incomparable";
    s.witness = ab.witness;
  }
  return s;
}

const char* relation_symbol(const std::string& rel) {
  if (rel == "equiv") return "=";
  if (rel == "greater") return ">=";
  if (rel == "less") return "<=";
  return "||";
}

int cmd_outcome(Engine& eng, const Options& opt, const std::string& expr, Report& rep) {
  AugId a = read_form(eng, expr);
  OutcomePair o = eng.outcome(a);
  rep.verdict = std::string(1, outcome_letter(outcome_class(o)));
  rep.lines.push_back(std::string("form: ") + print(eng, a));
  rep.lines.push_back(std::string("o^L = ") + winner_letter(o.left_start));
  rep.lines.push_back(std::string("o^R = ") + winner_letter(o.right_start));
  rep.lines.push_back(std::string("o = ") + outcome_letter(outcome_class(o)));
  (void)opt;
  return kExitDefinite;
}

int cmd_compare(Engine& eng, const Options& opt, const std::string& utext, const std::string& ea,
                const std::string& eb, Report& rep) {
  UniverseSpec u = make_universe(eng, utext, opt);
  rep.universe = fingerprint(eng, u);
  AugId a = read_form(eng, ea), b = read_form(eng, eb);
  TriVerdict ab = geq(eng, u, a, b);
  TriVerdict ba = geq(eng, u, b, a);
  RelationSummary s = summarize_relation(ab, ba);
  rep.verdict = s.relation;
  rep.lines.push_back(print(eng, a) + " " + relation_symbol(s.relation) + " " + print(eng, b) +
                      (s.proven ? " (proven)" : " (bounded)"));
  rep.lines.push_back("geq(A,B): " + verdict_text(ab));
  rep.lines.push_back("geq(B,A): " + verdict_text(ba));
  if (s.witness) rep.witness = print(eng, *s.witness);
  if (!s.proven) rep.bound = s.bound;
  return s.proven ? kExitDefinite : kExitBounded;
}

int cmd_simplify(Engine& eng, const Options& opt, const std::string& utext, const std::string& expr,
                 Report& rep) {
  UniverseSpec u = make_universe(eng, utext, opt);
  rep.universe = fingerprint(eng, u);
  AugId a = read_form(eng, expr);
  SimplestResult res =
      simplest_form(eng, u, a, opt.assume_bounded ? ReduceMode::BoundedAssumed : ReduceMode::Exact);
  rep.verdict = print(eng, res.form);
  rep.lines.push_back("input:    " + print(eng, a));
  rep.lines.push_back("simplest: " + rep.verdict);
  rep.lines.push_back(std::string("mode: ") +
                      (res.trace.exact ? "exact" : "bounded-assumed(" + std::to_string(res.trace.bound) + ")"));
  json steps = json::array();
  for (const ReductionStep& st : res.trace.steps) {
    json j;
    j["step"] = step_name(st.kind);
    j["side"] = st.side == Side::Left ? "L" : "R";
    j["at"] = print(eng, st.at);
    j["result"] = print(eng, st.result);
    if (st.option.raw) j["option"] = print(eng, st.option);
    if (st.target.raw) j["target"] = print(eng, st.target);
    steps.push_back(j);
    rep.lines.push_back(std::string("  ") + step_name(st.kind) + " [" +
                        (st.side == Side::Left ? "L" : "R") + "] " + print(eng, st.at) + " -> " +
                        print(eng, st.result));
  }
  rep.trace = steps;
  if (!res.trace.exact) rep.bound = res.trace.bound;
  return res.trace.exact ? kExitDefinite : kExitBounded;
}

int cmd_invertible(Engine& eng, const Options& opt, const std::string& utext, const std::string& expr,
                   const std::vector<std::string>& uhat, Report& rep) {
  UniverseSpec u = make_universe(eng, utext, opt);
  rep.universe = fingerprint(eng, u);
  AugId a = read_form(eng, expr);
  for (const std::string& s : uhat) rep.assumptions.push_back("in-uhat: " + print(eng, read_form(eng, s)));
  InvertVerdict v =
      is_invertible(eng, u, a, opt.assume_bounded ? ReduceMode::BoundedAssumed : ReduceMode::Exact);
  rep.verdict = verdict_text(v.verdict);
  rep.lines.push_back("form:     " + print(eng, a));
  rep.lines.push_back("simplest: " + print(eng, v.simplest));
  if (v.verdict.non_false()) {
    rep.lines.push_back("inverse:  " + print(eng, v.inverse));
  } else {
    rep.witness = print(eng, v.verdict.witness);
    rep.lines.push_back(std::string("failed: ") +
                        (v.verdict.condition == 's' ? "sum with conjugate is not Left strong"
                                                    : "an option is not invertible"));
  }
  if (v.verdict.kind == TriVerdict::Kind::BoundedTrue) {
    rep.bound = v.verdict.bound;
    return kExitBounded;
  }
  return kExitDefinite;
}

int cmd_predicates(Engine& eng, const Options&, const std::string& expr, Report& rep) {
  GameId g = read_plain(eng, expr);
  bool d = is_disintegrator(eng, g);
  bool s = is_starkiller(eng, g);
  bool ss = is_super_starkiller(eng, g);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  rep.verdict = std::string("disintegrator=") + yn(d) + ";starkiller=" + yn(s) +
                ";super-starkiller=" + yn(ss);
  rep.lines.push_back(std::string("disintegrator:    ") + yn(d));
  rep.lines.push_back(std::string("starkiller:       ") + yn(s));
  rep.lines.push_back(std::string("super starkiller: ") + yn(ss));
  return kExitDefinite;
}

int cmd_census(Engine& eng, const Options& opt, const std::string& utext, Report& rep) {
  UniverseSpec u = make_universe(eng, utext.empty() ? "M" : utext, opt);
  rep.universe = fingerprint(eng, u);
  std::vector<CensusClass> classes = day1_census(eng, u);
  rep.verdict = std::to_string(classes.size()) + " classes";
  json arr = json::array();
  for (const CensusClass& c : classes) {
    json cls;
    cls["representative"] = print(eng, c.representative);
    json mem = json::array();
    std::string line = print(eng, c.representative) + ":";
    for (AugId m : c.members) {
      mem.push_back(print(eng, m));
      line += " " + print(eng, m);
    }
    cls["members"] = mem;
    arr.push_back(cls);
    rep.lines.push_back(line);
  }
  rep.trace = arr;
  return kExitDefinite;
}

int cmd_probe(Engine& eng, const Options& opt, const std::string& utext,
              const std::vector<std::string>& uhat_in, const std::vector<std::string>& uhat_out,
              Report& rep) {
  UniverseSpec u = make_universe(eng, utext, opt);
  rep.universe = fingerprint(eng, u);
  UhatAssertions assertions;
  for (const std::string& s : uhat_in) {
    assertions.asserted_in.push_back(read_form(eng, s));
    rep.assumptions.push_back("in-uhat: " + print(eng, assertions.asserted_in.back()));
  }
  for (const std::string& s : uhat_out) {
    assertions.asserted_not_in.push_back(read_form(eng, s));
    rep.assumptions.push_back("not-in-uhat: " + print(eng, assertions.asserted_not_in.back()));
  }

  WeakCertificate weak = is_weak(eng, u);
  std::string weak_text;
  bool weak_definite = true;
  switch (weak.kind) {
    case WeakCertificate::Kind::FullMisereRule:
      weak_text = "yes (full-misere rule)";
      break;
    case WeakCertificate::Kind::WeakeningEnd:
      weak_text = "yes (weakening end " + print(eng, weak.end) + ")";
      break;
    case WeakCertificate::Kind::NotWeak:
      weak_text = "no (strong non-end-like witness " + print(eng, weak.witness) + ")";
      break;
    case WeakCertificate::Kind::Unknown:
      weak_text = "unknown (bound " + std::to_string(weak.bound) + ")";
      weak_definite = false;
      break;
  }
  rep.lines.push_back("weak: " + weak_text);

  ReducedReport red = is_reduced(eng, u, assertions);
  std::string red_text;
  bool red_definite = true;
  switch (red.overall) {
    case ReducedReport::Overall::Reduced:
      red_text = red.weakness_shortcut ? "yes (weak implies reduced)" : "yes";
      break;
    case ReducedReport::Overall::NotReduced:
      red_text = "no (invertible witness " + print(eng, *red.invertible_witness) + ")";
      rep.witness = print(eng, *red.invertible_witness);
      break;
    case ReducedReport::Overall::Inconclusive:
      red_text = "inconclusive";
      red_definite = false;
      break;
  }
  rep.lines.push_back("reduced: " + red_text);
  json items = json::array();
  for (const auto& item : red.items) {
    std::string status = item.status == ReducedReport::ItemStatus::Satisfied   ? "satisfied"
                         : item.status == ReducedReport::ItemStatus::Violated ? "violated"
                                                                              : "unknown";
    std::string line = "  [" + status + "] " + item.description;
    if (item.witness_end) line += " (end " + print(eng, *item.witness_end) + ")";
    if (item.reason == ReducedReport::UnknownReason::UhatUnresolved) line += " (U-hat membership unresolved)";
    if (item.reason == ReducedReport::UnknownReason::BoundedSearchExhausted)
      line += " (bounded search exhausted)";
    rep.lines.push_back(line);
    json ji;
    ji["item"] = item.description;
    ji["status"] = status;
    if (item.witness_end) ji["end"] = print(eng, *item.witness_end);
    items.push_back(ji);
  }
  rep.trace = items;
  std::string weak_word = weak_text.substr(0, weak_text.find(' '));
  std::string red_word = red_text.substr(0, red_text.find(' '));
  rep.verdict = "weak=" + weak_word + ";reduced=" + red_word;
  return weak_definite && red_definite ? kExitDefinite : kExitBounded;
}

int cmd_oracle_compare(Engine& eng, const Options& opt, const std::string& utext,
                       const std::string& ea, const std::string& eb, Report& rep) {
  std::vector<GameId> domain;
  if (utext == "J") {
    GameId mone = integer(eng, -1);
    GameId give2 = mk_game(eng, {}, {integer(eng, 2)});
    domain = additive_closure_members(eng, {mone, give2}, opt.bound);
    rep.universe = "J|b" + std::to_string(opt.bound);
  } else {
    UniverseSpec u = make_universe(eng, utext, opt);
    domain = members_up_to(eng, u, opt.bound, opt.width);
    rep.universe = fingerprint(eng, u);
  }
  AugId a = read_form(eng, ea), b = read_form(eng, eb);
  OracleResult ab = oracle_geq(eng, domain, a, b);
  OracleResult ba = oracle_geq(eng, domain, b, a);
  rep.lines.push_back("domain size: " + std::to_string(domain.size()));
  auto dir_text = [&](const char* name, const OracleResult& r) {
    std::string s = std::string(name) + (r.holds ? ": holds up to bound" : ": fails, witness ");
    if (!r.holds) s += print(eng, r.witness);
    rep.lines.push_back(s);
  };
  dir_text("A >= B", ab);
  dir_text("B >= A", ba);
  std::string rel = ab.holds && ba.holds ? "equiv" : ab.holds ? "greater" : ba.holds ? "less" : "incomparable";
  bool any_bounded_claim = ab.holds || ba.holds;
  rep.verdict = rel + (any_bounded_claim ? "-up-to-bound" : "");
  rep.bound = opt.bound;
  if (!ab.holds) rep.witness = print(eng, ab.witness);
  else if (!ba.holds) rep.witness = print(eng, ba.witness);
  return any_bounded_claim ? kExitBounded : kExitDefinite;
}

int cmd_jtable(Engine& eng, const Options& opt, int nmax, int mmax, Report& rep) {
  GameId mone = integer(eng, -1);
  GameId give2 = mk_game(eng, {}, {integer(eng, 2)});
  json rows = json::array();
  for (int n = 0; n <= nmax; ++n) {
    std::string line;
    for (int m = 0; m <= mmax; ++m) {
      GameId g = eng.zero();
      for (int i = 0; i < n; ++i) g = sum(eng, g, mone);
      for (int i = 0; i < m; ++i) g = sum(eng, g, give2);
      line += outcome_letter(outcome_class(eng.outcome(g)));
      if (m < mmax) line += ' ';
    }
    rows.push_back(line);
    rep.lines.push_back("n=" + std::to_string(n) + ": " + line);
  }
  rep.trace = rows;
  rep.verdict = "ok";
  (void)opt;
  return kExitDefinite;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"misere partizan game engine"};
  app.fallthrough();

  Options opt;
  app.add_option("--bound", opt.bound, "end enumeration birthday bound")->capture_default_str();
  app.add_option("--budget", opt.budget, "node budget")->capture_default_str();
  app.add_option("--width", opt.width, "enumeration width cap per side")->capture_default_str();
  app.add_flag("--assume-bounded", opt.assume_bounded, "let reductions use bounded-true evidence");
  app.add_flag("--json", opt.json_output, "JSON report output");
  app.add_option("--seed", opt.seed, "seed for sampled diagnostics");
  app.add_option("--cache-dir", opt.cache_dir, "memo cache directory");

  std::string expr_a, expr_b, universe_text;
  std::vector<std::string> uhat_in, uhat_out;
  int jt_n = 4, jt_m = 4;

  CLI::App* c_outcome = app.add_subcommand("outcome", "misere outcome of a form");
  c_outcome->add_option("expr", expr_a)->required();

  CLI::App* c_compare = app.add_subcommand("compare", "compare two forms modulo a universe");
  c_compare->add_option("universe", universe_text)->required();
  c_compare->add_option("exprA", expr_a)->required();
  c_compare->add_option("exprB", expr_b)->required();

  CLI::App* c_simplify = app.add_subcommand("simplify", "U-simplest form with reduction trace");
  c_simplify->add_option("universe", universe_text)->required();
  c_simplify->add_option("expr", expr_a)->required();

  CLI::App* c_invertible = app.add_subcommand("invertible", "invertibility analysis");
  c_invertible->add_option("universe", universe_text)->required();
  c_invertible->add_option("expr", expr_a)->required();
  c_invertible->add_option("--assert-uhat", uhat_in, "assert a form lies in U-hat");

  CLI::App* c_predicates = app.add_subcommand("predicates", "end predicates of a plain form");
  c_predicates->add_option("expr", expr_a)->required();

  CLI::App* c_census = app.add_subcommand("census", "day-1 census of augmented forms");
  c_census->add_option("universe", universe_text);

  CLI::App* c_probe = app.add_subcommand("probe", "weakness / reducedness report");
  c_probe->add_option("universe", universe_text)->required();
  c_probe->add_option("--assert-uhat", uhat_in, "assert a form lies in U-hat");
  c_probe->add_option("--assert-not-uhat", uhat_out, "assert a form lies outside U-hat");

  CLI::App* c_oracle = app.add_subcommand("oracle-compare", "definitional comparison over a domain");
  c_oracle->add_option("domain", universe_text, "universe text or J")->required();
  c_oracle->add_option("exprA", expr_a)->required();
  c_oracle->add_option("exprB", expr_b)->required();

  CLI::App* c_jtable = app.add_subcommand("jtable", "outcome grid over the J monoid");
  c_jtable->add_option("--n", jt_n)->capture_default_str();
  c_jtable->add_option("--m", jt_m)->capture_default_str();

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("misere");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitDefinite;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Engine eng;
  eng.set_node_limit(opt.budget);
  if (!opt.cache_dir.empty()) load_cache(eng, cache_file_in(opt.cache_dir));

  Report rep;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (c_outcome->parsed()) {
      rep.command = "outcome " + expr_a;
      rep.exit_code = cmd_outcome(eng, opt, expr_a, rep);
    } else if (c_compare->parsed()) {
      rep.command = "compare " + universe_text + " " + expr_a + " " + expr_b;
      rep.exit_code = cmd_compare(eng, opt, universe_text, expr_a, expr_b, rep);
    } else if (c_simplify->parsed()) {
      rep.command = "simplify " + universe_text + " " + expr_a;
      rep.exit_code = cmd_simplify(eng, opt, universe_text, expr_a, rep);
    } else if (c_invertible->parsed()) {
      rep.command = "invertible " + universe_text + " " + expr_a;
      rep.exit_code = cmd_invertible(eng, opt, universe_text, expr_a, uhat_in, rep);
    } else if (c_predicates->parsed()) {
      rep.command = "predicates " + expr_a;
      rep.exit_code = cmd_predicates(eng, opt, expr_a, rep);
    } else if (c_census->parsed()) {
      rep.command = "census " + (universe_text.empty() ? std::string("M") : universe_text);
      rep.exit_code = cmd_census(eng, opt, universe_text, rep);
    } else if (c_probe->parsed()) {
      rep.command = "probe " + universe_text;
      rep.exit_code = cmd_probe(eng, opt, universe_text, uhat_in, uhat_out, rep);
    } else if (c_oracle->parsed()) {
      rep.command = "oracle-compare " + universe_text + " " + expr_a + " " + expr_b;
      rep.exit_code = cmd_oracle_compare(eng, opt, universe_text, expr_a, expr_b, rep);
    } else if (c_jtable->parsed()) {
      rep.command = "jtable --n " + std::to_string(jt_n) + " --m " + std::to_string(jt_m);
      rep.exit_code = cmd_jtable(eng, opt, jt_n, jt_m, rep);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  }

  double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(rep, opt, eng, out, wall_ms);
  if (!opt.cache_dir.empty()) save_cache(eng, cache_file_in(opt.cache_dir));
  return rep.exit_code;
}

}  // namespace misere
