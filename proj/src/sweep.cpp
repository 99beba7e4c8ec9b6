#include "ztg/verifier.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ztg {

namespace {

std::vector<std::string> resolve_theorems(const std::vector<std::string>& requested) {
  if (requested.empty()) return all_theorem_ids();
  std::vector<std::string> out;
  for (const auto& id : requested) {
    if (!is_theorem_id(id)) throw SchemaError("unknown theorem id: " + id);
    out.push_back(canonical_theorem_id(id));
  }
  return out;
}

// T family of one module: Spec(M) plus every non-empty V(N), deduplicated,
// in a deterministic order
std::vector<Bitset> t_family(const ModuleCtx& ctx) {
  std::vector<Bitset> out;
  std::unordered_map<Bitset, char, BitsetHash> seen;
  Bitset full(ctx.spec_size());
  full.set_all();
  out.push_back(full);
  seen.emplace(full, 1);
  for (int i = 0; i < ctx.lat.count(); ++i) {
    const Bitset& v = ctx.vtab[i];
    if (v.none()) continue;
    if (seen.emplace(v, 1).second) out.push_back(v);
  }
  return out;
}

InstanceSpec with_t(const InstanceSpec& base, const ModuleCtx& ctx, const Bitset& t) {
  InstanceSpec s = base;
  if (t.count() == ctx.spec_size()) {
    s.t.kind = TSelector::Kind::Spec;
    s.t.primes.clear();
  } else {
    s.t.kind = TSelector::Kind::Primes;
    s.t.primes = t.members();
  }
  return s;
}

void account(SweepSummary& sum, const TheoremReport& r) {
  ++sum.total;
  if (r.skipped) {
    ++sum.skipped;
  } else if (!r.applicable) {
    ++sum.not_applicable;
  } else {
    ++sum.applicable;
    if (r.conclusion_holds.value_or(false))
      ++sum.passed;
    else
      ++sum.failed;
  }
}

std::vector<TheoremReport> run_module(const InstanceSpec& mod_spec,
                                      const std::vector<std::string>& theorems,
                                      const SweepOptions& opt) {
  std::vector<TheoremReport> out;
  std::shared_ptr<const ModuleCtx> probe;
  try {
    Ring R(mod_spec.ring);
    FiniteModule m = FiniteModule::direct_sum(R, mod_spec.blocks);
    if (m.is_zero_module()) return out; // nothing to check; families exclude it
    probe = ModuleCtx::build(m, mod_spec.caps, false);
  } catch (const CapExceeded& e) {
    for (const auto& id : theorems) {
      TheoremReport r;
      r.theorem = id;
      r.instance = mod_spec.to_json();
      r.skipped = true;
      r.skip_reason = e.what();
      out.push_back(std::move(r));
    }
    return out;
  }
  for (const Bitset& t : t_family(*probe)) {
    InstanceSpec inst = with_t(mod_spec, *probe, t);
    Workspace ws(inst, false); // instances run in parallel; keep kernels serial here
    ws.graph_observer = opt.graph_observer;
    for (const auto& id : theorems) out.push_back(check_theorem(id, ws));
  }
  return out;
}

} // namespace

SweepSummary sweep(const std::vector<InstanceSpec>& modules, const SweepOptions& opt) {
  std::vector<std::string> theorems = resolve_theorems(opt.theorems);
#ifdef _OPENMP
  if (opt.jobs > 0) omp_set_num_threads(opt.jobs);
#endif
  SweepSummary sum;
  const int chunk = 256;
  int count = static_cast<int>(modules.size());
  for (int lo = 0; lo < count; lo += chunk) {
    int hi = std::min(lo + chunk, count);
    std::vector<std::vector<TheoremReport>> results(hi - lo);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
#endif
    for (int i = lo; i < hi; ++i) results[i - lo] = run_module(modules[i], theorems, opt);
    for (auto& reports : results)
      for (auto& r : reports) {
        account(sum, r);
        if (opt.sink) opt.sink(r);
      }
  }
  return sum;
}

SweepSummary verify_instance(const InstanceSpec& spec, const SweepOptions& opt) {
  std::vector<std::string> theorems = resolve_theorems(opt.theorems);
  SweepSummary sum;
  Workspace ws(spec, opt.parallel);
  ws.graph_observer = opt.graph_observer;
  for (const auto& id : theorems) {
    TheoremReport r = check_theorem(id, ws);
    account(sum, r);
    if (opt.sink) opt.sink(r);
  }
  return sum;
}

} // namespace ztg
