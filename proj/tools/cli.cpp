#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "occred/errors.hpp"
#include "occred/graphs/expander.hpp"
#include "occred/graphs/export.hpp"
#include "occred/graphs/gadget.hpp"
#include "occred/graphs/routing.hpp"
#include "occred/oracle/game.hpp"
#include "occred/qdimacs.hpp"
#include "occred/reduction/pipeline.hpp"

namespace occred::cli {
namespace {

using nlohmann::json;

// Usage problems found after CLI11 accepted the arguments.
class UsageError : public Error {
 public:
  using Error::Error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("cannot write " + path);
}

std::vector<int> parse_steps(const std::string& text) {
  std::vector<int> steps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() != 1 || item[0] < '1' || item[0] > '3') throw UsageError("bad step list: " + text);
    steps.push_back(item[0] - '0');
  }
  try {
    check_steps(steps);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return steps;
}

void print_profile(std::ostream& out, const OccurrenceProfile& p) {
  out << "max universal occurrences " << p.max_universal << "\n"
      << "max existential occurrences " << p.max_existential << "\n"
      << "max clause size " << p.max_clause_size << "\n";
}

struct ReduceArgs {
  std::string input, output, trace, steps = "1,2,3", style = "expander", backend = "benes";
  std::uint32_t bypass = 2;
  bool json = false;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  PipelineOptions opts;
  opts.steps = parse_steps(a.steps);
  auto style = step2_style_from_string(a.style);
  auto backend = gadget_backend_from_string(a.backend);
  if (!style) throw UsageError("unknown style " + a.style);
  if (!backend) throw UsageError("unknown backend " + a.backend);
  opts.step2_style = *style;
  opts.gadget_backend = *backend;
  opts.bypass_threshold = a.bypass;

  auto start = std::chrono::steady_clock::now();
  auto f = read_qdimacs_file(a.input);
  auto result = run_pipeline(f, opts);
  auto text = serialize_qdimacs(result.formula);
  if (!a.output.empty()) write_file(a.output, text);
  if (!a.trace.empty()) write_file(a.trace, trace_json(result, opts).dump(2) + "\n");
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  // With no output file the formula goes to stdout and the report to stderr.
  std::ostream& report = a.output.empty() ? err : out;
  if (a.output.empty()) out << text;
  if (a.json) {
    json j;
    j["input"] = a.input;
    j["output"] = a.output.empty() ? json("stdout") : json(a.output);
    j["trace"] = a.trace.empty() ? json("skipped") : json(a.trace);
    auto r = to_json(result.report);
    // Per-variable counts stay in the trace; the report keeps the maxima.
    r["before"].erase("per_variable");
    r["after"].erase("per_variable");
    j["before"] = r["before"];
    j["after"] = r["after"];
    j["constants"] = r["constants"];
    j["oracle"] = "skipped";
    j["seed"] = "skipped";
    j["timing_ms"] = ms;
    report << j.dump() << "\n";
  } else {
    report << "reduced " << f.clauses.size() << " clauses to " << result.formula.clauses.size()
           << " over " << result.formula.variable_count << " variables\n";
    print_profile(report, result.report.after);
  }
  return kOk;
}

struct VerifyArgs {
  std::string original, reduced, mode = "exact";
  std::uint64_t budget = kDefaultGameBudget;
  bool witness = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.mode != "exact" && a.mode != "zero") throw UsageError("unknown mode " + a.mode);
  auto f = read_qdimacs_file(a.original);
  auto g = read_qdimacs_file(a.reduced);
  GameLimits limits{a.budget};
  auto vf = game_value(f, limits).value;
  auto vg = game_value(g, limits).value;
  const bool ok = a.mode == "exact" ? vf == vg : (vf == 0) == (vg == 0);
  out << "original value " << vf << "\n"
      << "reduced value " << vg << "\n";
  if (a.witness) {
    // Reduced prefixes are far too wide to enumerate; only the original gets one.
    auto w = outer_witness(f, limits);
    out << certificate_line(w, f.blocks.empty() ? std::vector<VariableId>{} : f.blocks.front().variables)
        << "\n";
  }
  out << (ok ? "preserved" : "not preserved") << " (" << a.mode << ")\n";
  return ok ? kOk : kViolated;
}

struct GraphArgs {
  std::string kind, backend = "benes", verify, dot, output;
  std::uint32_t size = 0;
};

int cmd_graph(const GraphArgs& a, std::ostream& out) {
  if (a.size == 0) throw UsageError("size must be at least 1");
  json j;
  std::string dot;
  bool passed = true;
  if (a.kind == "gadget") {
    auto backend = gadget_backend_from_string(a.backend);
    if (!backend) throw UsageError("unknown backend " + a.backend);
    auto g = build_gadget_graph(a.size, *backend);
    j = to_json(g);
    auto inv = check_gadget_invariants(g);
    passed = inv.ok();
    if (!a.verify.empty()) {
      RoutingCheck check;
      if (a.verify == "exhaustive") {
        check = RoutingCheck::exhaustive();
      } else if (a.verify.rfind("sampled:", 0) == 0) {
        std::uint64_t k = 0, seed = 0;
        char tail = 0;
        if (std::sscanf(a.verify.c_str(), "sampled:%lu:%lu%c", &k, &seed, &tail) != 2 || k == 0)
          throw UsageError("expected sampled:K:SEED, got " + a.verify);
        check = RoutingCheck::sampled(k, seed);
      } else {
        throw UsageError("gadgets verify with exhaustive or sampled:K:SEED");
      }
      auto report = verify_routing(g, check);
      j["verification"] = to_json(report);
      passed = passed && report.passed();
    }
    if (!a.dot.empty()) dot = export_dot(g);
  } else {
    auto g = build_expander(a.size, false);
    j = to_json(g);
    if (!a.verify.empty()) {
      ExpansionMode mode;
      if (a.verify == "exhaustive") mode = ExpansionMode::Exhaustive;
      else if (a.verify == "spectral") mode = ExpansionMode::Spectral;
      else throw UsageError("expanders verify with exhaustive or spectral");
      auto report = verify_edge_expansion(g, mode);
      j["verification"] = to_json(report);
      passed = report.holds;
    }
    if (!a.dot.empty()) dot = export_dot(g);
  }
  if (!a.dot.empty()) write_file(a.dot, dot);
  j["passed"] = passed;
  if (a.output.empty()) out << j.dump() << "\n";
  else write_file(a.output, j.dump(2) + "\n");
  if (!a.verify.empty()) out << "verification " << (passed ? "passed" : "failed") << "\n";
  return passed ? kOk : kCertification;
}

int cmd_stats(const std::string& input, bool as_json, std::ostream& out) {
  auto f = read_qdimacs_file(input);
  auto p = occurrence_profile(f);
  if (as_json) {
    json j;
    j["variables"] = f.variable_count;
    j["clauses"] = f.clauses.size();
    auto& blocks = j["blocks"] = json::array();
    for (const auto& b : f.blocks)
      blocks.push_back({{"kind", std::string(to_string(b.kind))}, {"size", b.variables.size()}});
    j["profile"] = to_json(p);
    out << j.dump() << "\n";
    return kOk;
  }
  out << "variables " << f.variable_count << "\n"
      << "clauses " << f.clauses.size() << "\n"
      << "blocks";
  for (const auto& b : f.blocks) out << " " << (b.kind == Quantifier::Universal ? 'a' : 'e') << b.variables.size();
  out << "\n";
  print_profile(out, p);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Occurrence-bounded reductions for quantified CNF formulas", "occred"};
  app.require_subcommand(1);

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Run the reduction pipeline on a QDIMACS file");
  r->add_option("input", reduce.input, "Input QDIMACS file")->required();
  r->add_option("-o,--output", reduce.output, "Output QDIMACS file (stdout if omitted)");
  r->add_option("--steps", reduce.steps, "Comma separated steps, ascending")->capture_default_str();
  r->add_option("--style", reduce.style, "Step 2 style: expander or cycle")->capture_default_str();
  r->add_option("--backend", reduce.backend, "Gadget backend: benes or recursive")->capture_default_str();
  r->add_option("--bypass", reduce.bypass, "Skip universals with at most N occurrences")->capture_default_str();
  r->add_option("--trace", reduce.trace, "Write the JSON trace here");
  r->add_flag("--json", reduce.json, "Machine readable report");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Compare game values of an original and a reduced file");
  v->add_option("original", verify.original)->required();
  v->add_option("reduced", verify.reduced)->required();
  v->add_option("--budget", verify.budget, "Search node budget")->capture_default_str();
  v->add_option("--mode", verify.mode, "exact or zero")->capture_default_str();
  v->add_flag("--witness", verify.witness, "Print an outermost-block witness of the original");

  GraphArgs graph;
  auto* g = app.add_subcommand("graph", "Build and optionally verify a gadget or an expander");
  g->add_option("kind", graph.kind)->required()->check(CLI::IsMember({"gadget", "expander"}));
  g->add_option("size", graph.size, "ell for gadgets, vertex lower bound for expanders")->required();
  g->add_option("--backend", graph.backend)->capture_default_str();
  g->add_option("--verify", graph.verify, "exhaustive, sampled:K:SEED or spectral");
  g->add_option("--dot", graph.dot, "Write a DOT rendering here");
  g->add_option("--out", graph.output, "Write the JSON here instead of stdout");

  std::string stats_input;
  bool stats_json = false;
  auto* s = app.add_subcommand("stats", "Occurrence profile and block structure");
  s->add_option("input", stats_input)->required();
  s->add_flag("--json", stats_json);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "occred: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*r) return cmd_reduce(reduce, out, err);
    if (*v) return cmd_verify(verify, out);
    if (*g) return cmd_graph(graph, out);
    return cmd_stats(stats_input, stats_json, out);
  } catch (const ParseError& e) {
    err << "occred: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "occred: " << e.what() << "\n";
    return kUsage;
  } catch (const CertificationError& e) {
    err << "occred: certification failed: " << e.what() << "\n";
    return kCertification;
  } catch (const BudgetExceeded& e) {
    err << "occred: " << e.what() << "\n";
    return kBudget;
  } catch (const TooLargeForExhaustive& e) {
    err << "occred: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "occred: " << e.what() << "\n";
    return kViolated;
  }
}

}  // namespace occred::cli
