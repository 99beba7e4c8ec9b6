// Command-line front end. Subcommands: spec, graph, metrics, verify, export.
// Exit codes: 0 success, 1 counterexample, 2 usage/schema error, 3 cap
// exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ztg/verifier.hpp"

using namespace ztg;

namespace {

struct InstanceArgs {
  std::string file;
  std::string inline_json;
  std::string ring;
  std::string module;
  std::string t = "spec";
  std::string s;
  std::int64_t max_elements = -1;
  std::int64_t max_submodules = -1;
  int max_chi_vertices = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("instance", file, "instance JSON file");
    cmd->add_option("--instance-json", inline_json, "inline instance JSON");
    cmd->add_option("--ring", ring, "comma-separated moduli, e.g. 6,2");
    cmd->add_option("--module", module, "block lists as JSON, e.g. [[2,4],[3]]");
    cmd->add_option("--T", t, "\"spec\" or a T selector as JSON");
    cmd->add_option("--S", s, "multiplicative set as a JSON list of tuples");
    cmd->add_option("--max-elements", max_elements, "carrier size cap");
    cmd->add_option("--max-submodules", max_submodules, "lattice size cap");
    cmd->add_option("--max-chi-vertices", max_chi_vertices, "exact coloring cap");
  }

  InstanceSpec resolve() const {
    InstanceSpec spec;
    if (!file.empty()) {
      spec = InstanceSpec::from_file(file);
    } else if (!inline_json.empty()) {
      spec = InstanceSpec::from_json(Json::parse(inline_json, nullptr, true));
    } else if (!ring.empty() && !module.empty()) {
      Json j;
      Json r = Json::array();
      std::stringstream ss(ring);
      std::string tok;
      while (std::getline(ss, tok, ',')) r.push_back(std::stoll(tok));
      j["ring"] = r;
      j["module"] = Json::parse(module);
      if (t == "spec")
        j["T"] = "spec";
      else
        j["T"] = Json::parse(t);
      if (!s.empty()) j["S"] = Json::parse(s);
      spec = InstanceSpec::from_json(j);
    } else {
      throw SchemaError("an instance file, --instance-json, or --ring/--module is required");
    }
    if (max_elements > 0) spec.caps.max_elements = max_elements;
    if (max_submodules > 0) spec.caps.max_submodules = max_submodules;
    if (max_chi_vertices > 0) spec.caps.max_chi_vertices = max_chi_vertices;
    return spec;
  }
};

std::string sub_label_of(const ModuleCtx& ctx, int id) {
  return submodule_label(ctx.m, ctx.lat.sub(id).mask);
}

int cmd_spec(const InstanceArgs& args, bool as_json) {
  Workspace ws(args.resolve());
  const auto& ctx = *ws.root();
  const TContext& tc = ws.tc();
  std::vector<std::string> primes;
  for (int id : ctx.spec) primes.push_back(sub_label_of(ctx, id));
  std::vector<std::string> mins;
  for (int id : min_members(ctx, tc.t)) mins.push_back(sub_label_of(ctx, id));
  if (as_json) {
    Json j;
    j["spec"] = primes;
    j["t_size"] = tc.t.count();
    j["min_t"] = mins;
    j["Q"] = sub_label_of(ctx, tc.q_id);
    j["mbar_order"] = tc.mbar.ctx->m.size();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Spec(M): " << primes.size() << " prime submodule(s)\n";
    for (const auto& p : primes) std::cout << "  " << p << "\n";
    std::cout << "Min(T): ";
    for (std::size_t i = 0; i < mins.size(); ++i) std::cout << (i ? ", " : "") << mins[i];
    std::cout << "\nQ = " << sub_label_of(ctx, tc.q_id) << "\n";
    std::cout << "Mbar: order " << tc.mbar.ctx->m.size() << "\n";
  }
  return 0;
}

const Graph& build_which(Workspace& ws, const std::string& which) {
  if (which == "g-tau") return ws.g_tau();
  if (which == "ag") return ws.ag_of(ws.root());
  if (which == "ag-star") return ws.ag_star_of(ws.root());
  throw SchemaError("unknown graph kind: " + which + " (expected g-tau|ag|ag-star)");
}

int cmd_graph(const InstanceArgs& args, const std::string& which, const std::string& format,
              std::ostream& out) {
  InstanceSpec spec = args.resolve();
  Workspace ws(spec);
  const Graph& g = build_which(ws, which);
  if (format == "dot") {
    out << to_dot(g);
  } else if (format == "json") {
    Json j;
    try {
      GraphMetrics m = metrics(g, spec.caps.max_chi_vertices);
      j = graph_to_json(g, &m);
    } catch (const CapExceeded& e) {
      j = graph_to_json(g, nullptr);
      j["metrics"] = Json{{"skipped", e.what()}};
    }
    out << j.dump(2) << "\n";
  } else {
    throw SchemaError("unknown format: " + format);
  }
  return 0;
}

int cmd_metrics(const InstanceArgs& args, const std::string& which) {
  InstanceSpec spec = args.resolve();
  Workspace ws(spec);
  const Graph& g = build_which(ws, which);
  GraphMetrics m = metrics(g, spec.caps.max_chi_vertices);
  std::cout << metrics_to_json(m).dump(2) << "\n";
  return 0;
}

int cmd_verify(const InstanceArgs& args, const std::vector<std::string>& theorems,
               const std::vector<std::string>& sweeps, int jobs, bool timings) {
  SweepOptions opt;
  opt.theorems = theorems;
  opt.jobs = jobs;
  opt.sink = [&](const TheoremReport& r) {
    std::cout << r.to_json(timings).dump() << "\n";
  };
  SweepSummary sum;
  if (!sweeps.empty()) {
    Caps caps;
    InstanceArgs defaults = args;
    if (defaults.max_elements > 0) caps.max_elements = defaults.max_elements;
    if (defaults.max_submodules > 0) caps.max_submodules = defaults.max_submodules;
    if (defaults.max_chi_vertices > 0) caps.max_chi_vertices = defaults.max_chi_vertices;
    std::vector<InstanceSpec> fam;
    for (const auto& expr : sweeps) {
      auto f = expand_family(expr, caps);
      fam.insert(fam.end(), f.begin(), f.end());
    }
    sum = sweep(fam, opt);
  } else {
    sum = verify_instance(args.resolve(), opt);
  }
  std::cout << sum.to_json().dump() << "\n";
  return sum.failed > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for Zariski topology-graphs of finite modules"};
  app.require_subcommand(1);

  InstanceArgs spec_args, graph_args, metrics_args, verify_args, export_args;
  bool spec_json = false;
  std::string graph_which = "g-tau", graph_format = "dot";
  std::string metrics_which = "g-tau";
  std::string export_which = "g-tau", export_format = "dot", export_out;
  std::vector<std::string> theorems, sweeps;
  int jobs = 0;
  bool timings = false;
  std::int64_t seed = 0;

  auto* c_spec = app.add_subcommand("spec", "list Spec(M), Min(T), Q and Mbar");
  spec_args.attach(c_spec);
  c_spec->add_flag("--json", spec_json, "machine-readable output");

  auto* c_graph = app.add_subcommand("graph", "build a graph and print it");
  graph_args.attach(c_graph);
  c_graph->add_option("--which", graph_which, "g-tau|ag|ag-star");
  c_graph->add_option("--format", graph_format, "dot|json");

  auto* c_metrics = app.add_subcommand("metrics", "exact graph metrics as JSON");
  metrics_args.attach(c_metrics);
  c_metrics->add_option("--which", metrics_which, "g-tau|ag|ag-star");

  auto* c_verify = app.add_subcommand("verify", "run theorem checkers");
  verify_args.attach(c_verify);
  c_verify->add_option("--theorem", theorems, "theorem id filter (repeatable)");
  c_verify->add_option("--sweep", sweeps, "family expression, e.g. zn:2..60 (repeatable)");
  c_verify->add_option("--jobs", jobs, "sweep parallelism (0 = default)");
  c_verify->add_flag("--timings", timings, "include per-report timings");
  c_verify->add_option("--seed", seed, "reserved for randomized sweep subsampling");

  auto* c_export = app.add_subcommand("export", "write a graph to a file");
  export_args.attach(c_export);
  c_export->add_option("--which", export_which, "g-tau|ag|ag-star");
  c_export->add_option("--format", export_format, "dot|json");
  c_export->add_option("--out", export_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_spec->parsed()) return cmd_spec(spec_args, spec_json);
    if (c_graph->parsed()) return cmd_graph(graph_args, graph_which, graph_format, std::cout);
    if (c_metrics->parsed()) return cmd_metrics(metrics_args, metrics_which);
    if (c_verify->parsed()) return cmd_verify(verify_args, theorems, sweeps, jobs, timings);
    if (c_export->parsed()) {
      std::ofstream out(export_out);
      if (!out) throw SchemaError("cannot open output file: " + export_out);
      return cmd_graph(export_args, export_which, export_format, out);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
