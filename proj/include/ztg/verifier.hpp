#pragma once

#include <functional>
#include <map>
#include <optional>

#include "ztg/metrics.hpp"

#include "json.hpp"

namespace ztg {

using Json = nlohmann::ordered_json;

struct TSelector {
  enum class Kind { Spec, ClosedOf, Primes } kind = Kind::Spec;
  std::vector<std::vector<std::int64_t>> closed_of; // element tuples of a submodule
  std::vector<int> primes;                          // positions in the canonical Spec order
};

// One verification instance: a ring, a module shape, a T selector, and
// optionally a multiplicative set for localization checks.
struct InstanceSpec {
  std::vector<std::int64_t> ring;
  std::vector<std::vector<std::int64_t>> blocks;
  TSelector t;
  std::optional<std::vector<std::vector<std::int64_t>>> s_tuples;
  Caps caps;
  bool caps_overridden = false;

  Json to_json() const;
  static InstanceSpec from_json(const Json& j); // strict: unknown keys rejected
  static InstanceSpec from_file(const std::string& path);
  std::string repro_command(const std::string& theorem) const;
};

struct TheoremReport {
  std::string theorem;
  Json instance;
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool applicable = false;
  std::optional<bool> conclusion_holds; // populated iff applicable
  Json witness;                         // structured counterexample data
  std::string note;                     // e.g. degenerate sub-cases
  bool skipped = false;
  std::string skip_reason;
  double ms = 0.0;

  bool counterexample() const {
    return applicable && conclusion_holds.has_value() && !*conclusion_holds;
  }
  Json to_json(bool with_timing = false) const;
};

// Derived state of one instance, memoized across checkers.
class Workspace {
public:
  Workspace(const InstanceSpec& spec, bool parallel = true);

  const InstanceSpec& spec() const { return spec_; }
  const Caps& caps() const { return spec_.caps; }
  const std::shared_ptr<const ModuleCtx>& root() const { return root_; }
  TContext& tc() { return *tc_; }
  bool t_is_spec() const;

  const Graph& g_tau();
  const GraphMetrics& g_structural(); // no solvers
  const GraphMetrics& g_full();       // with exact omega/chi; may throw CapExceeded

  const QuotientCtx& quotient_ctx(int kernel_id); // memoized by kernel id
  const Graph& ag_of(const std::shared_ptr<const ModuleCtx>& ctx);
  const Graph& ag_star_of(const std::shared_ptr<const ModuleCtx>& ctx);

  const IdempotentSplit& split_of(std::int64_t e);
  std::vector<std::int64_t> nontrivial_idempotents() const;

  bool parallel() const { return parallel_; }
  std::function<void(const Graph&)> graph_observer; // invoked on every build

private:
  void observe(const Graph& g) {
    if (graph_observer) graph_observer(g);
  }
  InstanceSpec spec_;
  bool parallel_;
  std::shared_ptr<const ModuleCtx> root_;
  std::optional<TContext> tc_;
  std::optional<Graph> gtau_;
  std::optional<GraphMetrics> structural_;
  std::optional<GraphMetrics> full_;
  std::map<int, QuotientCtx> quot_memo_;
  std::map<const ModuleCtx*, Graph> ag_memo_, ag_star_memo_;
  std::map<std::int64_t, IdempotentSplit> split_memo_;
  std::map<const ModuleCtx*, std::shared_ptr<const ModuleCtx>> pinned_;
};

// checker registry; "C4.13" is accepted as an alias of "L4.12"
const std::vector<std::string>& all_theorem_ids();
bool is_theorem_id(const std::string& id);
std::string canonical_theorem_id(const std::string& id);

TheoremReport check_theorem(const std::string& id, Workspace& ws);

struct SweepSummary {
  std::int64_t total = 0;
  std::int64_t applicable = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t not_applicable = 0;
  std::int64_t skipped = 0;
  Json to_json() const;
};

struct SweepOptions {
  std::vector<std::string> theorems; // empty = whole roster
  int jobs = 0;                      // 0 = library default
  bool parallel = true;
  std::function<void(const TheoremReport&)> sink; // called in canonical order
  std::function<void(const Graph&)> graph_observer;
};

// family expressions: "zn:A..B" and "products:max=N"
std::vector<InstanceSpec> expand_family(const std::string& expr, const Caps& caps);

// Runs every requested checker over every instance, with T ranging over
// Spec(M) and every non-empty V(N), deduplicated. Deterministic order.
SweepSummary sweep(const std::vector<InstanceSpec>& modules, const SweepOptions& opt);

// single-instance verification (the instance's own T selector)
SweepSummary verify_instance(const InstanceSpec& spec, const SweepOptions& opt);

// deterministic exports
Json metrics_to_json(const GraphMetrics& m);
Json graph_to_json(const Graph& g, const GraphMetrics* m); // m may be null

} // namespace ztg
