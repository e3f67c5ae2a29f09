// rtcproof: check, search for, refute, translate and render cyclic RTC proofs.
//
// Exit status: 0 positive verdict, 1 negative verdict, 2 unknown or out of
// budget, 3 usage or I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rtc/errors.hpp"
#include "rtc/parser.hpp"
#include "rtc/prover.hpp"
#include "rtc/theory.hpp"
#include "rtc/tracecheck.hpp"
#include "rtc/translate.hpp"

using namespace rtc;

namespace {

enum Exit { kPositive = 0, kNegative = 1, kUnknown = 2, kUsage = 3 };

struct Options {
  std::string input;
  std::string theory;
  std::string out;
  std::string format = "text";
  std::string mode = "pa";
  int depth = 12;
  std::size_t max_nodes = 100000;
  int model_size = 3;
  bool normal = false;
  bool allow_cut = false;
  bool global = false;
};

// Output goes to --out when given, stdout otherwise.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

// A literal, or the non-comment lines of a file by that name.
std::string text_or_file(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::string line, body;
  while (std::getline(in, line)) {
    auto t = line.substr(0, line.find_last_not_of(" \t\r") + 1);
    t.erase(0, t.find_first_not_of(" \t"));
    if (t.empty() || t[0] == '#') continue;
    body += (body.empty() ? "" : " ") + t;
  }
  return body;
}

Theory theory_of(const Options& o) { return o.theory.empty() ? Theory{} : load_theory(o.theory); }

int cmd_check(const Options& o) {
  auto g = load_proof(o.input);
  if (!o.theory.empty()) g.theory = load_theory(o.theory);
  auto errs = validate_structure(g, g.theory);
  if (!errs.empty()) {
    std::cout << "rejected; " << errs.size() << " structural error" << (errs.size() == 1 ? "" : "s") << "\n";
    for (const auto& e : errs) std::cout << "  " << describe(e) << "\n";
    return kNegative;
  }
  auto rep = check_global_trace_condition(g);
  if (rep.verdict == CycleReport::Verdict::Indeterminate) {
    std::cout << "unknown; closure budget exhausted after " << rep.explored << " elements\n";
    return kUnknown;
  }
  if (!rep.accepted()) {
    std::cout << "rejected; no progressing trace along an infinite path\n";
    std::cout << "prefix:";
    for (int n : rep.prefix) std::cout << " " << n;
    std::cout << "\nperiod: " << print_cycle(rep.period) << "\n";
    return kNegative;
  }
  std::vector<BasicCycle> cycles;
  try {
    cycles = enumerate_basic_cycles(g);
  } catch (const BudgetExceeded&) {
    std::cout << "accepted; basic cycles not enumerated (budget)\n";
    return o.normal ? kUnknown : kPositive;
  }
  bool normal = is_non_overlapping(cycles);
  std::cout << "accepted; " << cycles.size() << " basic cycle" << (cycles.size() == 1 ? "" : "s") << "; "
            << (normal ? "normal" : "not normal") << "\n";
  return o.normal && !normal ? kNegative : kPositive;
}

std::string model_text(const CounterModel& cm) {
  return dump_model(cm.model) + "\n" + dump_valuation(cm.valuation) + "\n";
}

int cmd_prove(const Options& o) {
  SearchConfig cfg;
  cfg.theory = theory_of(o);
  cfg.max_depth = o.depth;
  cfg.max_nodes = o.max_nodes;
  cfg.refute_size = o.model_size;
  cfg.allow_cut = o.allow_cut;
  cfg.global_companions = o.global;
  Signature sig = cfg.theory.sig;
  auto goal = parse_sequent(text_or_file(o.input), sig, ParseOptions{true, true});
  auto res = prove(goal, cfg);
  switch (res.kind) {
    case SearchOutcome::Kind::Proved: {
      std::ostringstream s;
      s << "# proved; " << res.nodes_explored << " nodes explored; depth " << res.depth << "\n";
      s << write_proof(*res.proof);
      if (o.out.empty()) {
        std::cout << s.str();
      } else {
        emit(o, s.str());
        std::cout << "proved; " << res.nodes_explored << " nodes explored; depth " << res.depth << "\n";
      }
      return kPositive;
    }
    case SearchOutcome::Kind::Refuted:
      std::cout << "refuted; counter-model of size " << res.counter->model.size << "\n" << model_text(*res.counter);
      return kNegative;
    case SearchOutcome::Kind::Unknown:
      break;
  }
  std::cout << "unknown; " << res.reason << " (" << res.nodes_explored << " nodes explored)\n";
  return kUnknown;
}

int cmd_refute(const Options& o) {
  auto th = theory_of(o);
  Signature sig = th.sig;
  auto goal = parse_sequent(text_or_file(o.input), sig, ParseOptions{true, true});
  ModelSearchOptions opts;
  opts.max_size = o.model_size;
  opts.extra = th.sig;
  try {
    if (auto cm = find_counter_model(goal, th.axioms, opts)) {
      std::cout << "counter-model of size " << cm->model.size << "\n" << model_text(*cm);
      return kNegative;
    }
  } catch (const BudgetExceeded&) {
    std::cout << "unknown; model search budget exhausted\n";
    return kUnknown;
  }
  std::cout << "no counter-model up to size " << o.model_size << "\n";
  return kPositive;
}

int cmd_translate_ind(const Options& o) {
  auto p = load_proof(o.input);
  if (!o.theory.empty()) p.theory = load_theory(o.theory);
  ProofGraph q;
  try {
    q = explicit_to_cyclic(p);
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    std::cout << "not translated; " << e.what() << "\n";
    return kNegative;
  }
  emit(o, write_proof(q));
  return kPositive;
}

int cmd_translate_beta(const Options& o) {
  auto cfg = BetaConfig::standard(o.mode == "tc" ? BetaMode::Tc : BetaMode::Pa);
  Signature sig = theory_of(o).sig;
  auto f = parse_formula(text_or_file(o.input), sig, ParseOptions{true, true});
  try {
    emit(o, print(beta_translate(f, cfg)) + "\n");
  } catch (const SignatureMismatch& e) {
    std::cout << "not translated; " << e.what() << "\n";
    return kNegative;
  }
  return kPositive;
}

int cmd_render(const Options& o) {
  auto g = load_proof(o.input);
  std::set<std::pair<int, int>> hl;
  if (validate_structure(g, g.theory).empty()) hl = progressing_edges(g);
  if (o.format == "dot") emit(o, render_dot(g, hl));
  else if (o.format == "tex") emit(o, render_latex(g));
  else emit(o, render_text(g));
  return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check, search for and translate cyclic proofs with reflexive-transitive closure."};
  app.set_config("--config");
  app.require_subcommand(1);
  Options o;

  auto add_theory = [&](CLI::App* c) { c->add_option("--theory", o.theory, "theory file")->check(CLI::ExistingFile); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "write output here instead of stdout"); };

  auto* check = app.add_subcommand("check", "validate a proof file and decide the trace condition");
  check->add_option("proof", o.input)->required()->check(CLI::ExistingFile);
  add_theory(check);
  check->add_flag("--normal", o.normal, "also require non-overlapping basic cycles");

  auto* provec = app.add_subcommand("prove", "search for a cyclic proof of a sequent");
  provec->add_option("sequent", o.input, "sequent text or a file holding it")->required();
  add_theory(provec);
  provec->add_option("--depth", o.depth, "deepening bound")->check(CLI::NonNegativeNumber);
  provec->add_option("--max-nodes", o.max_nodes, "node budget");
  provec->add_option("--model-size", o.model_size, "counter-model size cap, 0 to skip")->check(CLI::Range(0, kModelSizeCap));
  provec->add_flag("--allow-cut", o.allow_cut, "propose cuts on atomic subformulas");
  provec->add_flag("--global-companions", o.global, "let buds target nodes off the current branch");
  add_out(provec);

  auto* refute = app.add_subcommand("refute", "look for a finite counter-model");
  refute->add_option("sequent", o.input, "sequent text or a file holding it")->required();
  add_theory(refute);
  refute->add_option("--model-size", o.model_size, "largest domain tried")->check(CLI::Range(1, kModelSizeCap));

  auto* tind = app.add_subcommand("translate-ind", "replace explicit induction by cycles");
  tind->add_option("proof", o.input)->required()->check(CLI::ExistingFile);
  add_theory(tind);
  add_out(tind);

  auto* tbeta = app.add_subcommand("translate-beta", "translate closures into arithmetic");
  tbeta->add_option("formula", o.input, "formula text or a file holding it")->required();
  tbeta->add_option("--mode", o.mode, "how u < z is spelled")->check(CLI::IsMember({"pa", "tc"}));
  add_theory(tbeta);
  add_out(tbeta);

  auto* render = app.add_subcommand("render", "draw a proof graph");
  render->add_option("proof", o.input)->required()->check(CLI::ExistingFile);
  render->add_option("--format", o.format)->check(CLI::IsMember({"dot", "tex", "text"}));
  add_out(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPositive : kUsage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*provec) return cmd_prove(o);
    if (*refute) return cmd_refute(o);
    if (*tind) return cmd_translate_ind(o);
    if (*tbeta) return cmd_translate_beta(o);
    if (*render) return cmd_render(o);
  } catch (const Error& e) {
    std::cerr << "rtcproof: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "rtcproof: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
