#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rtc/errors.hpp"
#include "rtc/parser.hpp"
#include "rtc/prover.hpp"
#include "rtc/theory.hpp"
#include "rtc/tracecheck.hpp"
#include "rtc/translate.hpp"

namespace py = pybind11;
using namespace rtc;

namespace {

const ParseOptions kInfer{true, true};

Theory theory_from(const std::string& text) { return text.empty() ? Theory{} : parse_theory(text); }

py::dict check_text(const std::string& text, bool normal) {
  auto g = parse_proof(text);
  py::dict out;
  std::vector<std::string> errs;
  for (const auto& e : validate_structure(g, g.theory)) errs.push_back(describe(e));
  out["errors"] = errs;
  out["verdict"] = "rejected";
  if (!errs.empty()) return out;
  auto rep = check_global_trace_condition(g);
  if (rep.verdict == CycleReport::Verdict::Indeterminate) {
    out["verdict"] = "unknown";
    return out;
  }
  if (!rep.accepted()) {
    out["prefix"] = rep.prefix;
    out["period"] = print_cycle(rep.period);
    return out;
  }
  auto cycles = enumerate_basic_cycles(g);
  bool nonoverlap = is_non_overlapping(cycles);
  out["cycles"] = cycles.size();
  out["normal"] = nonoverlap;
  out["verdict"] = normal && !nonoverlap ? "rejected" : "accepted";
  return out;
}

py::dict prove_text(const std::string& goal, const std::string& theory, int max_depth, std::size_t max_nodes,
                    int refute_size, bool allow_cut, bool global_companions) {
  SearchConfig cfg;
  cfg.theory = theory_from(theory);
  cfg.max_depth = max_depth;
  cfg.max_nodes = max_nodes;
  cfg.refute_size = refute_size;
  cfg.allow_cut = allow_cut;
  cfg.global_companions = global_companions;
  Signature sig = cfg.theory.sig;
  SearchOutcome res;
  {
    auto s = parse_sequent(goal, sig, kInfer);
    py::gil_scoped_release nogil;
    res = prove(s, cfg);
  }
  py::dict out;
  out["kind"] = std::string(outcome_name(res.kind));
  out["nodes_explored"] = res.nodes_explored;
  out["depth"] = res.depth;
  out["reason"] = res.reason;
  out["proof"] = res.proof ? py::object(py::str(write_proof(*res.proof))) : py::object(py::none());
  if (res.counter) {
    out["model"] = dump_model(res.counter->model);
    out["valuation"] = res.counter->valuation;
  } else {
    out["model"] = py::none();
  }
  return out;
}

py::object refute_text(const std::string& goal, const std::string& theory, int max_size) {
  auto th = theory_from(theory);
  Signature sig = th.sig;
  auto s = parse_sequent(goal, sig, kInfer);
  ModelSearchOptions opts;
  opts.max_size = max_size;
  opts.extra = th.sig;
  auto cm = find_counter_model(s, th.axioms, opts);
  if (!cm) return py::none();
  py::dict out;
  out["size"] = cm->model.size;
  out["model"] = dump_model(cm->model);
  out["valuation"] = cm->valuation;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cyclic proofs with reflexive-transitive closure";

  py::register_exception<Error>(m, "RtcError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def(
      "normalize_formula", [](const std::string& t) {
        Signature sig;
        return print(canonicalize(parse_formula(t, sig, kInfer)));
      },
      py::arg("text"));
  m.def(
      "normalize_sequent", [](const std::string& t) {
        Signature sig;
        return print(parse_sequent(t, sig, kInfer));
      },
      py::arg("text"));
  m.def("check", &check_text, py::arg("proof"), py::arg("normal") = false,
        "Validate a proof given as text and decide the trace condition.");
  m.def("prove", &prove_text, py::arg("goal"), py::arg("theory") = "", py::arg("max_depth") = 12,
        py::arg("max_nodes") = 100000, py::arg("refute_size") = 3, py::arg("allow_cut") = false,
        py::arg("global_companions") = false);
  m.def("refute", &refute_text, py::arg("goal"), py::arg("theory") = "", py::arg("max_size") = 3);
  m.def(
      "translate_induction", [](const std::string& text) { return write_proof(explicit_to_cyclic(parse_proof(text))); },
      py::arg("proof"));
  m.def(
      "translate_beta",
      [](const std::string& text, const std::string& mode) {
        if (mode != "pa" && mode != "tc") throw py::value_error("mode must be 'pa' or 'tc'");
        Signature sig;
        auto cfg = BetaConfig::standard(mode == "tc" ? BetaMode::Tc : BetaMode::Pa);
        return print(beta_translate(parse_formula(text, sig, kInfer), cfg));
      },
      py::arg("formula"), py::arg("mode") = "pa");
  m.def(
      "render",
      [](const std::string& text, const std::string& format) {
        auto g = parse_proof(text);
        if (format == "dot") return render_dot(g, progressing_edges(g));
        if (format == "tex") return render_latex(g);
        if (format == "text") return render_text(g);
        throw py::value_error("format must be 'dot', 'tex' or 'text'");
      },
      py::arg("proof"), py::arg("format") = "dot");
}
