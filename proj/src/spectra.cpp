#include "ztg/spectra.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ztg {

bool is_prime_submodule(const FiniteModule& m, const Bitset& sub, const Ideal& sub_colon) {
  if (sub.count() == m.size()) return false; // proper only
  const Ring& R = m.ring();
  for (std::int64_t r = 0; r < R.size(); ++r) {
    if (R.ideal_contains_elem(sub_colon, r)) continue;
    for (int x = 0; x < m.size(); ++x) {
      if (sub.test(x)) continue;
      if (sub.test(m.smul(r, x))) return false; // re in P, r not in (P:M), e not in P
    }
  }
  return true;
}

bool is_prime_submodule(const FiniteModule& m, const Bitset& sub) {
  return is_prime_submodule(m, sub, colon(m, sub));
}

std::vector<int> spectrum_ids_serial(const FiniteModule& m, const SubmoduleLattice& lat) {
  std::vector<int> out;
  for (int i = 0; i < lat.count(); ++i)
    if (is_prime_submodule(m, lat.sub(i).mask, lat.colon_of(i))) out.push_back(i);
  return out;
}

std::vector<int> spectrum_ids(const FiniteModule& m, const SubmoduleLattice& lat,
                              bool parallel) {
#ifdef _OPENMP
  if (parallel && lat.count() > 64) {
    std::vector<char> prime(lat.count(), 0);
    int n = lat.count();
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i)
      prime[i] = is_prime_submodule(m, lat.sub(i).mask, lat.colon_of(i)) ? 1 : 0;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if (prime[i]) out.push_back(i);
    return out;
  }
#else
  (void)parallel;
#endif
  return spectrum_ids_serial(m, lat);
}

namespace {

Bitset v_of(const Ring& R, const SubmoduleLattice& lat, const std::vector<int>& spec,
            int id) {
  Bitset v(static_cast<int>(spec.size()));
  const Ideal& cn = lat.colon_of(id);
  for (std::size_t j = 0; j < spec.size(); ++j)
    if (R.ideal_contains(lat.colon_of(spec[j]), cn)) v.set(static_cast<int>(j));
  return v;
}

} // namespace

std::vector<Bitset> v_table_serial(const FiniteModule& m, const SubmoduleLattice& lat,
                                   const std::vector<int>& spec) {
  std::vector<Bitset> out(lat.count());
  for (int i = 0; i < lat.count(); ++i) out[i] = v_of(m.ring(), lat, spec, i);
  return out;
}

std::vector<Bitset> v_table(const FiniteModule& m, const SubmoduleLattice& lat,
                            const std::vector<int>& spec, bool parallel) {
#ifdef _OPENMP
  if (parallel && lat.count() > 256) {
    std::vector<Bitset> out(lat.count());
    int n = lat.count();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) out[i] = v_of(m.ring(), lat, spec, i);
    return out;
  }
#else
  (void)parallel;
#endif
  return v_table_serial(m, lat, spec);
}

int ModuleCtx::spec_pos(int lattice_id) const {
  auto it = std::lower_bound(spec.begin(), spec.end(), lattice_id);
  if (it == spec.end() || *it != lattice_id) return -1;
  return static_cast<int>(it - spec.begin());
}

std::shared_ptr<const ModuleCtx> ModuleCtx::build(FiniteModule mod, const Caps& caps,
                                                  bool parallel) {
  SubmoduleLattice lat = SubmoduleLattice::build(mod, caps, parallel);
  return build_with_lattice(std::move(mod), std::move(lat), parallel);
}

std::shared_ptr<const ModuleCtx> ModuleCtx::build_with_lattice(FiniteModule mod,
                                                               SubmoduleLattice lat,
                                                               bool parallel) {
  auto ctx = std::make_shared<ModuleCtx>(ModuleCtx{std::move(mod), std::move(lat), {}, {}});
  ctx->spec = spectrum_ids(ctx->m, ctx->lat, parallel);
  ctx->vtab = v_table(ctx->m, ctx->lat, ctx->spec, parallel);
  return ctx;
}

Bitset v_star_of(const ModuleCtx& ctx, int id) {
  Bitset v(ctx.spec_size());
  for (int j = 0; j < ctx.spec_size(); ++j)
    if (ctx.lat.sub(id).mask.is_subset_of(ctx.lat.sub(ctx.spec[j]).mask)) v.set(j);
  return v;
}

int radical_id(const ModuleCtx& ctx, int id) {
  Bitset acc(ctx.m.size());
  bool found = false;
  for (int j = 0; j < ctx.spec_size(); ++j) {
    const Bitset& p = ctx.lat.sub(ctx.spec[j]).mask;
    if (!ctx.lat.sub(id).mask.is_subset_of(p)) continue;
    if (!found) {
      acc = p;
      found = true;
    } else {
      acc &= p;
    }
  }
  if (!found) return ctx.lat.full_id();
  return ctx.lat.require_id(acc);
}

std::vector<Bitset> closed_sets(const ModuleCtx& ctx) {
  std::vector<Bitset> out;
  std::unordered_map<Bitset, char, BitsetHash> seen;
  for (int i = 0; i < ctx.lat.count(); ++i)
    if (seen.emplace(ctx.vtab[i], 1).second) out.push_back(ctx.vtab[i]);
  return out;
}

int intersection_id(const ModuleCtx& ctx, const Bitset& t) {
  if (t.none()) throw std::invalid_argument("T must be non-empty");
  Bitset acc(ctx.m.size());
  acc.set_all();
  for (int j : t.members()) acc &= ctx.lat.sub(ctx.spec[j]).mask;
  return ctx.lat.require_id(acc);
}

bool is_closed(const ModuleCtx& ctx, const Bitset& t) {
  if (t.none()) return false;
  return ctx.vtab[intersection_id(ctx, t)] == t;
}

bool is_irreducible(const ModuleCtx& ctx, const Bitset& t) {
  if (t.none()) return false;
  if (!is_closed(ctx, t))
    throw std::invalid_argument("irreducibility query on a non-closed T");
  // closed subsets of T are the closed sets of Spec(M) contained in T
  std::vector<Bitset> inside;
  for (const Bitset& c : closed_sets(ctx))
    if (c.is_subset_of(t) && !(c == t)) inside.push_back(c);
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = i; j < inside.size(); ++j)
      if ((inside[i] | inside[j]) == t) return false;
  return true;
}

std::vector<int> min_members(const ModuleCtx& ctx, const Bitset& t) {
  std::vector<int> ids;
  for (int j : t.members()) ids.push_back(ctx.spec[j]);
  std::vector<int> out;
  for (int a : ids) {
    bool minimal = true;
    for (int b : ids)
      if (b != a && ctx.lat.sub(b).mask.is_subset_of(ctx.lat.sub(a).mask)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<int, Ideal>> natural_map(const ModuleCtx& ctx) {
  Ideal ann = ctx.lat.colon_of(ctx.lat.zero_id());
  QuotientRing q = quotient_ring(ctx.m.ring(), ann);
  std::vector<std::pair<int, Ideal>> out;
  for (int j = 0; j < ctx.spec_size(); ++j)
    out.emplace_back(j, q.project_ideal(ctx.m.ring(), ctx.lat.colon_of(ctx.spec[j])));
  return out;
}

bool is_primeful(const ModuleCtx& ctx) {
  if (ctx.m.is_zero_module()) return true;
  const Ring& R = ctx.m.ring();
  Ideal ann = ctx.lat.colon_of(ctx.lat.zero_id());
  // Spec(R/Ann) corresponds to the primes of R containing Ann
  std::vector<Ideal> targets;
  for (const Ideal& p : R.prime_ideals())
    if (R.ideal_contains(p, ann)) targets.push_back(p);
  for (const Ideal& p : targets) {
    bool hit = false;
    for (int j = 0; j < ctx.spec_size(); ++j)
      if (ctx.lat.colon_of(ctx.spec[j]) == p) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool is_x_injective(const ModuleCtx& ctx) {
  for (int i = 0; i < ctx.spec_size(); ++i)
    for (int j = i + 1; j < ctx.spec_size(); ++j)
      if (ctx.lat.colon_of(ctx.spec[i]) == ctx.lat.colon_of(ctx.spec[j])) return false;
  return true;
}

QuotientCtx build_quotient_ctx(const std::shared_ptr<const ModuleCtx>& base, int kernel_id,
                               const Caps& caps, bool parallel) {
  FiniteModule q = FiniteModule::quotient(base->m, base->lat.sub(kernel_id).mask);
  SubmoduleLattice qlat = SubmoduleLattice::for_quotient(q, base->lat, caps, parallel);
  QuotientCtx out;
  out.ctx = ModuleCtx::build_with_lattice(std::move(q), std::move(qlat), parallel);
  out.to_base.resize(out.ctx->lat.count());
  out.from_base.assign(base->lat.count(), -1);
  for (int i = 0; i < out.ctx->lat.count(); ++i) {
    // full preimage of N/K in M
    Bitset pre(base->m.size());
    for (int p = 0; p < base->m.size(); ++p)
      if (out.ctx->m.from_parent(p) >= 0 &&
          out.ctx->lat.sub(i).mask.test(out.ctx->m.from_parent(p)))
        pre.set(p);
    int bid = base->lat.require_id(pre);
    out.to_base[i] = bid;
    out.from_base[bid] = i;
  }
  return out;
}

TContext make_t_context(const std::shared_ptr<const ModuleCtx>& base, const Bitset& t,
                        const Caps& caps, bool parallel) {
  if (base->spec.empty())
    throw std::invalid_argument("Spec(M) is empty; no T-context exists");
  if (t.none()) throw std::invalid_argument("T must be non-empty");
  if (!is_closed(*base, t)) throw std::invalid_argument("T must be closed");
  TContext tc;
  tc.base = base;
  tc.t = t;
  for (int j : t.members()) tc.t_ids.push_back(base->spec[j]);
  tc.inter_id = intersection_id(*base, t);
  Bitset qmask = ideal_times_module(base->m, base->lat.colon_of(tc.inter_id));
  tc.q_id = base->lat.require_id(qmask);
  tc.mbar = build_quotient_ctx(base, tc.q_id, caps, parallel);
  // Q is contained in every member of T
  for (int id : tc.t_ids)
    if (!base->lat.contains(id, tc.q_id))
      throw std::logic_error("Q must be contained in every member of T");
  return tc;
}

IdempotentSplit decompose_by_idempotent(const TContext& tc, std::int64_t e,
                                        const Caps& caps, bool parallel) {
  const ModuleCtx& base = *tc.base;
  const Ring& R = base.m.ring();
  if (!R.is_idempotent(e)) throw std::invalid_argument("e is not idempotent");
  if (e == R.zero_elem() || e == R.one())
    throw std::invalid_argument("trivial idempotents are rejected");
  std::int64_t f = R.add(R.one(), R.neg(e)); // 1 - e

  auto part_mask = [&](std::int64_t idem) {
    Bitset mask(base.m.size());
    for (int x = 0; x < base.m.size(); ++x) mask.set(base.m.smul(idem, x));
    return mask;
  };
  Bitset m1_mask = part_mask(e), m2_mask = part_mask(f);

  IdempotentSplit sp;
  sp.e = e;
  FiniteModule m1 = FiniteModule::subcarrier(base.m, m1_mask);
  FiniteModule m2 = FiniteModule::subcarrier(base.m, m2_mask);
  SubmoduleLattice l1 = SubmoduleLattice::for_subcarrier(m1, base.lat, caps, parallel);
  SubmoduleLattice l2 = SubmoduleLattice::for_subcarrier(m2, base.lat, caps, parallel);
  sp.m1 = ModuleCtx::build_with_lattice(std::move(m1), std::move(l1), parallel);
  sp.m2 = ModuleCtx::build_with_lattice(std::move(m2), std::move(l2), parallel);

  auto to_base_ids = [&](const std::shared_ptr<const ModuleCtx>& part) {
    std::vector<int> ids(part->lat.count());
    for (int i = 0; i < part->lat.count(); ++i) {
      Bitset up(base.m.size());
      for (int x : part->lat.sub(i).elems) up.set(part->m.to_parent(x));
      ids[i] = base.lat.require_id(up);
    }
    return ids;
  };
  sp.m1_to_base = to_base_ids(sp.m1);
  sp.m2_to_base = to_base_ids(sp.m2);

  // T_i = { P_i in Spec(M_i) : P_i ⊕ M_(3-i) in T }
  auto trace = [&](const std::shared_ptr<const ModuleCtx>& part,
                   const std::vector<int>& part_to_base, const Bitset& other_full) {
    Bitset ti(part->spec_size());
    for (int id : tc.t_ids) {
      const Bitset& p = base.lat.sub(id).mask;
      // P = P_i ⊕ M_other exactly when M_other <= P
      if (!other_full.is_subset_of(p)) continue;
      Bitset pi(part->m.size());
      for (int x = 0; x < part->m.size(); ++x)
        if (p.test(part->m.to_parent(x))) pi.set(x);
      int pid = part->lat.require_id(pi);
      int pos = part->spec_pos(pid);
      if (pos < 0) throw std::logic_error("trace of a prime is not prime in the factor");
      ti.set(pos);
    }
    return ti;
  };
  sp.t1 = trace(sp.m1, sp.m1_to_base, m2_mask);
  sp.t2 = trace(sp.m2, sp.m2_to_base, m1_mask);

  auto q_of = [&](const std::shared_ptr<const ModuleCtx>& part, const Bitset& ti) {
    Bitset inter(part->m.size());
    inter.set_all();
    for (int j : ti.members()) inter &= part->lat.sub(part->spec[j]).mask;
    // empty T_i: the empty intersection is the whole factor
    Ideal cn = colon(part->m, inter);
    return part->lat.require_id(ideal_times_module(part->m, cn));
  };
  sp.q1_id = q_of(sp.m1, sp.t1);
  sp.q2_id = q_of(sp.m2, sp.t2);
  sp.mbar1 = build_quotient_ctx(sp.m1, sp.q1_id, caps, parallel);
  sp.mbar2 = build_quotient_ctx(sp.m2, sp.q2_id, caps, parallel);

  // Q = Q_1 ⊕ Q_2
  {
    Bitset q1_up(base.m.size()), q2_up(base.m.size());
    for (int x : sp.m1->lat.sub(sp.q1_id).elems) q1_up.set(sp.m1->m.to_parent(x));
    for (int x : sp.m2->lat.sub(sp.q2_id).elems) q2_up.set(sp.m2->m.to_parent(x));
    if (!(sum_mask(base.m, q1_up, q2_up) == base.lat.sub(tc.q_id).mask))
      throw std::logic_error("Q != Q_1 + Q_2 in the idempotent decomposition");
  }
  // Mbar ~= Mbar_1 ⊕ Mbar_2 via x |-> (ex, (1-e)x)
  {
    const FiniteModule& mb = tc.mbar.ctx->m;
    std::int64_t n1 = sp.mbar1.ctx->m.size(), n2 = sp.mbar2.ctx->m.size();
    if (static_cast<std::int64_t>(mb.size()) != n1 * n2)
      throw std::logic_error("quotient does not split along the idempotent");
    std::vector<char> hit(static_cast<std::size_t>(n1 * n2), 0);
    for (int i = 0; i < mb.size(); ++i) {
      int x = mb.to_parent(i);
      int a = sp.mbar1.ctx->m.from_parent(sp.m1->m.from_parent(base.m.smul(e, x)));
      int b = sp.mbar2.ctx->m.from_parent(sp.m2->m.from_parent(base.m.smul(f, x)));
      auto key = static_cast<std::size_t>(a) * n2 + b;
      if (hit[key]) throw std::logic_error("split map is not injective");
      hit[key] = 1;
    }
  }
  return sp;
}

} // namespace ztg
