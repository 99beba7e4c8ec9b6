#include "ztg/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ztg {

namespace {

void verify_axioms(const FiniteModule& m) {
  const Ring& R = m.ring();
  // keep the exhaustive check to small instances; larger ones get spot checks
  if (R.size() * m.size() > (1 << 14)) {
    for (int x = 0; x < m.size(); ++x) {
      if (m.smul(R.one(), x) != x) throw std::logic_error("module action not unital");
      if (m.add(x, m.neg(x)) != m.zero()) throw std::logic_error("negation broken");
    }
    return;
  }
  for (int x = 0; x < m.size(); ++x)
    if (m.smul(R.one(), x) != x) throw std::logic_error("module action not unital");
  for (std::int64_t r = 0; r < R.size(); ++r)
    for (int x = 0; x < m.size(); ++x) {
      for (int y = 0; y < m.size(); ++y)
        if (m.smul(r, m.add(x, y)) != m.add(m.smul(r, x), m.smul(r, y)))
          throw std::logic_error("action not distributive over module addition");
      for (std::int64_t s = 0; s < R.size(); ++s) {
        if (m.smul(R.add(r, s), x) != m.add(m.smul(r, x), m.smul(s, x)))
          throw std::logic_error("action not distributive over ring addition");
        if (m.smul(R.mul(r, s), x) != m.smul(r, m.smul(s, x)))
          throw std::logic_error("action not associative");
      }
    }
}

} // namespace

FiniteModule FiniteModule::direct_sum(Ring R, std::vector<std::vector<std::int64_t>> blocks) {
  if (R.is_zero()) throw std::invalid_argument("modules over the zero ring are not supported");
  if (static_cast<int>(blocks.size()) != R.factors())
    throw std::invalid_argument("one block list per ring factor required");
  auto d = std::make_shared<Data>();
  d->kind = Kind::Root;
  d->ring = R;
  for (int i = 0; i < R.factors(); ++i) {
    for (auto o : blocks[i]) {
      if (o < 2 || R.moduli()[i] % o != 0)
        throw std::invalid_argument("block order must be a divisor >= 2 of its ring modulus");
      d->block_factor.push_back(i);
      d->block_order.push_back(o);
    }
  }
  int b = static_cast<int>(d->block_order.size());
  d->stride.resize(b);
  std::int64_t s = 1;
  for (int j = b - 1; j >= 0; --j) {
    d->stride[j] = s;
    if (s > (std::int64_t{1} << 30) / d->block_order[j])
      throw std::invalid_argument("module carrier too large");
    s *= d->block_order[j];
  }
  d->n = static_cast<int>(s);
  d->ring_residues.resize(R.size());
  for (std::int64_t r = 0; r < R.size(); ++r) d->ring_residues[r] = R.residues(r);
  FiniteModule m(std::move(d));
  verify_axioms(m);
  return m;
}

FiniteModule FiniteModule::quotient(const FiniteModule& parent, const Bitset& kernel) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::Quotient;
  d->ring = parent.ring();
  d->parent = parent.d_;
  auto kelems = kernel.members();
  int pn = parent.size();
  std::vector<int> rep_of(pn, -1);
  d->from_parent.assign(pn, -1);
  for (int p = 0; p < pn; ++p) {
    if (rep_of[p] >= 0) continue;
    // p is the least element of its coset since we scan in index order
    for (int k : kelems) rep_of[parent.add(p, k)] = p;
    d->from_parent[p] = static_cast<int>(d->to_parent.size());
    d->to_parent.push_back(p);
  }
  for (int p = 0; p < pn; ++p) d->from_parent[p] = d->from_parent[rep_of[p]];
  d->n = static_cast<int>(d->to_parent.size());
  return FiniteModule(std::move(d));
}

FiniteModule FiniteModule::subcarrier(const FiniteModule& parent, const Bitset& members) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::Subcarrier;
  d->ring = parent.ring();
  d->parent = parent.d_;
  d->to_parent = members.members();
  d->from_parent.assign(parent.size(), -1);
  for (std::size_t i = 0; i < d->to_parent.size(); ++i)
    d->from_parent[d->to_parent[i]] = static_cast<int>(i);
  d->n = static_cast<int>(d->to_parent.size());
  return FiniteModule(std::move(d));
}

FiniteModule FiniteModule::subcarrier_over(const FiniteModule& parent, const Bitset& members,
                                           Ring ring, std::vector<std::int64_t> ring_lift) {
  FiniteModule m = subcarrier(parent, members);
  auto d = std::make_shared<Data>(*m.d_);
  d->ring = std::move(ring);
  d->ring_lift = std::move(ring_lift);
  FiniteModule out(std::move(d));
  verify_axioms(out);
  return out;
}

int FiniteModule::add_impl(const Data& d, int a, int b) {
  switch (d.kind) {
    case Kind::Root: {
      int e = 0;
      for (std::size_t j = 0; j < d.block_order.size(); ++j) {
        std::int64_t o = d.block_order[j], st = d.stride[j];
        std::int64_t x = (a / st) % o + (b / st) % o;
        if (x >= o) x -= o;
        e += static_cast<int>(x * st);
      }
      return e;
    }
    default:
      return d.from_parent[add_impl(*d.parent, d.to_parent[a], d.to_parent[b])];
  }
}

int FiniteModule::neg_impl(const Data& d, int a) {
  switch (d.kind) {
    case Kind::Root: {
      int e = 0;
      for (std::size_t j = 0; j < d.block_order.size(); ++j) {
        std::int64_t o = d.block_order[j], st = d.stride[j];
        std::int64_t x = (a / st) % o;
        if (x) x = o - x;
        e += static_cast<int>(x * st);
      }
      return e;
    }
    default:
      return d.from_parent[neg_impl(*d.parent, d.to_parent[a])];
  }
}

int FiniteModule::smul_impl(const Data& d, std::int64_t r, int a) {
  switch (d.kind) {
    case Kind::Root: {
      const auto& res = d.ring_residues[r];
      int e = 0;
      for (std::size_t j = 0; j < d.block_order.size(); ++j) {
        std::int64_t o = d.block_order[j], st = d.stride[j];
        std::int64_t x = (res[d.block_factor[j]] * ((a / st) % o)) % o;
        e += static_cast<int>(x * st);
      }
      return e;
    }
    case Kind::Quotient:
      return d.from_parent[smul_impl(*d.parent, r, d.to_parent[a])];
    case Kind::Subcarrier: {
      std::int64_t rr = d.ring_lift.empty() ? r : d.ring_lift[r];
      return d.from_parent[smul_impl(*d.parent, rr, d.to_parent[a])];
    }
  }
  return 0;
}

int FiniteModule::add(int a, int b) const { return add_impl(*d_, a, b); }
int FiniteModule::neg(int a) const { return neg_impl(*d_, a); }
int FiniteModule::smul(std::int64_t r, int a) const { return smul_impl(*d_, r, a); }

int FiniteModule::to_parent(int local) const {
  return d_->kind == Kind::Root ? local : d_->to_parent[local];
}

int FiniteModule::from_parent(int parent) const {
  return d_->kind == Kind::Root ? parent : d_->from_parent[parent];
}

std::vector<std::int64_t> FiniteModule::label_tuple(int m) const {
  const Data* d = d_.get();
  while (d->kind != Kind::Root) {
    m = d->to_parent[m];
    d = d->parent.get();
  }
  std::vector<std::int64_t> t(d->block_order.size());
  for (std::size_t j = 0; j < d->block_order.size(); ++j)
    t[j] = (m / d->stride[j]) % d->block_order[j];
  if (t.empty()) t.push_back(0); // zero module
  return t;
}

int FiniteModule::element_of_tuple(const std::vector<std::int64_t>& tuple) const {
  if (d_->kind != Kind::Root)
    throw std::logic_error("element_of_tuple is defined for root modules only");
  if (d_->block_order.empty()) {
    if (tuple.size() == 1 && tuple[0] == 0) return 0;
    throw SchemaError("element tuple does not match the zero module");
  }
  if (tuple.size() != d_->block_order.size())
    throw SchemaError("element tuple arity mismatch");
  int e = 0;
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    if (tuple[j] < 0 || tuple[j] >= d_->block_order[j])
      throw SchemaError("element tuple residue out of range");
    e += static_cast<int>(tuple[j] * d_->stride[j]);
  }
  return e;
}

std::string FiniteModule::elem_str(int m) const {
  auto t = label_tuple(m);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

Submodule make_submodule(const FiniteModule& m, const Bitset& mask) {
  Submodule s;
  s.mask = mask;
  s.elems = mask.members();
  if (!mask.test(m.zero())) throw std::invalid_argument("submodule must contain zero");
  return s;
}

Bitset close_under_add(const FiniteModule& m, const std::vector<int>& seed) {
  Bitset mask(m.size());
  std::vector<int> elems;
  auto push = [&](int x) {
    if (!mask.test(x)) {
      mask.set(x);
      elems.push_back(x);
    }
  };
  push(m.zero());
  for (int s : seed) push(s);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) push(m.add(elems[i], elems[j]));
  return mask;
}

Bitset sum_mask(const FiniteModule& m, const Bitset& a, const Bitset& b) {
  Bitset out(m.size());
  auto bm = b.members();
  for (int x : a.members())
    for (int y : bm) out.set(m.add(x, y));
  return out;
}

Ideal colon(const FiniteModule& m, const Bitset& sub) {
  const Ring& R = m.ring();
  std::vector<std::int64_t> rs;
  for (std::int64_t r = 0; r < R.size(); ++r) {
    bool in = true;
    for (int x = 0; x < m.size(); ++x)
      if (!sub.test(m.smul(r, x))) {
        in = false;
        break;
      }
    if (in) rs.push_back(r);
  }
  return R.ideal_from_elements(rs);
}

Ideal annihilator(const FiniteModule& m) {
  Bitset zero(m.size());
  zero.set(m.zero());
  return colon(m, zero);
}

Bitset ideal_times_module(const FiniteModule& m, const Ideal& I) {
  Bitset full(m.size());
  full.set_all();
  return ideal_times_sub(m, I, full);
}

Bitset ideal_times_sub(const FiniteModule& m, const Ideal& I, const Bitset& sub) {
  std::int64_t g = m.ring().ideal_generator(I);
  Bitset out(m.size());
  for (int x : sub.members()) out.set(m.smul(g, x));
  return out; // gN is already closed under addition and scalars
}

Bitset product_mask(const FiniteModule& m, const Bitset& a, const Bitset& b) {
  Ideal p = m.ring().ideal_product(colon(m, a), colon(m, b));
  return ideal_times_module(m, p);
}

std::vector<int> minimal_generators(const FiniteModule& m, const Bitset& sub) {
  std::vector<int> gens;
  Bitset span(m.size());
  span.set(m.zero());
  for (int x : sub.members()) {
    if (span.test(x)) continue;
    gens.push_back(x);
    std::vector<int> seed = span.members();
    seed.push_back(x);
    // close under addition and the scalar action
    const Ring& R = m.ring();
    std::vector<int> scaled;
    for (std::int64_t r = 0; r < R.size(); ++r) scaled.push_back(m.smul(r, x));
    seed.insert(seed.end(), scaled.begin(), scaled.end());
    span = close_under_add(m, seed);
    if (span == sub) break;
  }
  return gens;
}

std::string submodule_label(const FiniteModule& m, const Bitset& sub) {
  if (sub.count() == 1) return "0";
  if (sub.count() == m.size()) return "M";
  auto gens = minimal_generators(m, sub);
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ',';
    os << m.elem_str(gens[i]);
  }
  os << '>';
  return os.str();
}

std::vector<Ideal> lattice_colons_serial(const FiniteModule& m,
                                         const std::vector<Bitset>& masks) {
  std::vector<Ideal> out(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) out[i] = colon(m, masks[i]);
  return out;
}

std::vector<Ideal> lattice_colons(const FiniteModule& m, const std::vector<Bitset>& masks,
                                  bool parallel) {
#ifdef _OPENMP
  if (parallel && masks.size() > 64) {
    std::vector<Ideal> out(masks.size());
    int count = static_cast<int>(masks.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < count; ++i) out[i] = colon(m, masks[i]);
    return out;
  }
#else
  (void)parallel;
#endif
  return lattice_colons_serial(m, masks);
}

int SubmoduleLattice::id_of(const Bitset& mask) const {
  auto it = index_.find(mask);
  return it == index_.end() ? -1 : it->second;
}

int SubmoduleLattice::require_id(const Bitset& mask) const {
  int id = id_of(mask);
  if (id < 0) throw std::logic_error("element set is not a submodule of this lattice");
  return id;
}

void SubmoduleLattice::finalize(const FiniteModule& m, std::vector<Bitset> masks,
                                const Caps& caps, bool parallel) {
  if (static_cast<std::int64_t>(masks.size()) > caps.max_submodules)
    throw CapExceeded("max_submodules", static_cast<std::int64_t>(masks.size()),
                      caps.max_submodules);
  subs_.reserve(masks.size());
  for (auto& mk : masks) subs_.push_back(make_submodule(m, mk));
  std::sort(subs_.begin(), subs_.end(),
            [](const Submodule& a, const Submodule& b) { return a.elems < b.elems; });
  std::vector<Bitset> sorted;
  sorted.reserve(subs_.size());
  for (int i = 0; i < count(); ++i) {
    index_.emplace(subs_[i].mask, i);
    sorted.push_back(subs_[i].mask);
    if (subs_[i].elems.size() == 1) zero_id_ = i;
    if (static_cast<int>(subs_[i].elems.size()) == m.size()) full_id_ = i;
  }
  colons_ = lattice_colons(m, sorted, parallel);
}

namespace {

// subgroups of the set `carrier` (a subgroup of M supported on one ring
// factor) by breadth-first closure: extend each known subgroup by one
// outside element, close under addition, dedupe
std::vector<Bitset> subgroups_by_closure(const FiniteModule& m,
                                         const std::vector<int>& carrier,
                                         const Caps& caps) {
  std::vector<Bitset> known;
  Bitset triv(m.size());
  triv.set(m.zero());
  known.push_back(triv);
  std::unordered_map<Bitset, char, BitsetHash> seen;
  seen.emplace(triv, 1);
  for (std::size_t i = 0; i < known.size(); ++i) {
    Bitset cur = known[i];
    for (int x : carrier) {
      if (cur.test(x)) continue;
      std::vector<int> seed = cur.members();
      seed.push_back(x);
      Bitset nxt = close_under_add(m, seed);
      if (seen.emplace(nxt, 1).second) {
        known.push_back(nxt);
        if (static_cast<std::int64_t>(known.size()) > caps.max_submodules)
          throw CapExceeded("max_submodules", static_cast<std::int64_t>(known.size()),
                            caps.max_submodules);
      }
    }
  }
  return known;
}

} // namespace

SubmoduleLattice SubmoduleLattice::build(const FiniteModule& m, const Caps& caps,
                                         bool parallel) {
  if (m.size() > caps.max_elements)
    throw CapExceeded("max_elements", m.size(), caps.max_elements);
  if (m.kind() != FiniteModule::Kind::Root)
    throw std::logic_error("build() expects a root module; use the derived builders");

  // Submodules over a product ring split across the factors (forced by the
  // component idempotents), and within one factor every additively closed
  // set is scalar-closed. So: per-factor subgroup enumeration, then all
  // cross-factor direct sums.
  const Ring& R = m.ring();
  std::vector<std::vector<Bitset>> per_factor(R.factors());
  for (int f = 0; f < R.factors(); ++f) {
    std::vector<int> carrier;
    std::int64_t one_f = 0; // indicator idempotent of factor f
    {
      std::vector<std::int64_t> res(R.factors(), 0);
      res[f] = 1 % R.moduli()[f];
      one_f = R.element(res);
    }
    for (int x = 0; x < m.size(); ++x)
      if (m.smul(one_f, x) == x) carrier.push_back(x);
    per_factor[f] = subgroups_by_closure(m, carrier, caps);
  }

  std::int64_t projected = 1;
  for (const auto& pf : per_factor) {
    projected *= static_cast<std::int64_t>(pf.size());
    if (projected > caps.max_submodules)
      throw CapExceeded("max_submodules", projected, caps.max_submodules);
  }

  std::vector<Bitset> masks;
  {
    Bitset triv(m.size());
    triv.set(m.zero());
    masks.push_back(triv);
  }
  for (const auto& pf : per_factor) {
    std::vector<Bitset> next;
    next.reserve(masks.size() * pf.size());
    for (const auto& a : masks)
      for (const auto& b : pf) next.push_back(sum_mask(m, a, b));
    masks = std::move(next);
  }

  SubmoduleLattice lat;
  lat.finalize(m, std::move(masks), caps, parallel);
  return lat;
}

SubmoduleLattice SubmoduleLattice::for_quotient(const FiniteModule& q,
                                                const SubmoduleLattice& parent_lat,
                                                const Caps& caps, bool parallel) {
  // submodules of M/K are exactly N/K for N >= K
  Bitset kernel(q.parent().size());
  for (int p = 0; p < q.parent().size(); ++p)
    if (q.from_parent(p) == 0) kernel.set(p);
  std::vector<Bitset> masks;
  for (int i = 0; i < parent_lat.count(); ++i) {
    if (!kernel.is_subset_of(parent_lat.sub(i).mask)) continue;
    Bitset img(q.size());
    for (int e : parent_lat.sub(i).elems) img.set(q.from_parent(e));
    masks.push_back(std::move(img));
  }
  SubmoduleLattice lat;
  lat.finalize(q, std::move(masks), caps, parallel);
  return lat;
}

SubmoduleLattice SubmoduleLattice::for_subcarrier(const FiniteModule& s,
                                                  const SubmoduleLattice& parent_lat,
                                                  const Caps& caps, bool parallel) {
  Bitset members(s.parent().size());
  for (int i = 0; i < s.size(); ++i) members.set(s.to_parent(i));
  std::vector<Bitset> masks;
  for (int i = 0; i < parent_lat.count(); ++i) {
    if (!parent_lat.sub(i).mask.is_subset_of(members)) continue;
    Bitset img(s.size());
    for (int e : parent_lat.sub(i).elems) img.set(s.from_parent(e));
    masks.push_back(std::move(img));
  }
  SubmoduleLattice lat;
  lat.finalize(s, std::move(masks), caps, parallel);
  return lat;
}

bool is_faithful(const FiniteModule& m) {
  return annihilator(m) == m.ring().zero_ideal();
}

bool is_simple(const FiniteModule& m, const SubmoduleLattice& lat) {
  (void)m;
  return lat.count() == 2;
}

bool is_cyclic(const FiniteModule& m) {
  const Ring& R = m.ring();
  for (int x = 0; x < m.size(); ++x) {
    Bitset orbit(m.size());
    for (std::int64_t r = 0; r < R.size(); ++r) orbit.set(m.smul(r, x));
    if (orbit.count() == m.size()) return true;
  }
  return m.size() == 1;
}

bool is_prime_module(const FiniteModule& m) {
  if (m.is_zero_module()) return false;
  const Ring& R = m.ring();
  Ideal ann = annihilator(m);
  for (std::int64_t r = 0; r < R.size(); ++r) {
    if (R.ideal_contains_elem(ann, r)) continue;
    for (int x = 1; x < m.size(); ++x)
      if (x != m.zero() && m.smul(r, x) == m.zero()) return false;
  }
  return true;
}

bool is_semiprime_module(const FiniteModule& m, const SubmoduleLattice& lat) {
  const Ring& R = m.ring();
  for (const Ideal& I : R.all_ideals()) {
    Ideal I2 = R.ideal_product(I, I);
    for (int k = 0; k < lat.count(); ++k) {
      Bitset i2k = ideal_times_sub(m, I2, lat.sub(k).mask);
      if (i2k.count() != 1) continue;
      Bitset ik = ideal_times_sub(m, I, lat.sub(k).mask);
      if (ik.count() != 1) return false;
    }
  }
  return true;
}

bool is_multiplication(const FiniteModule& m, const SubmoduleLattice& lat) {
  for (int i = 0; i < lat.count(); ++i) {
    Bitset im = ideal_times_module(m, lat.colon_of(i));
    if (!(im == lat.sub(i).mask)) return false;
  }
  return true;
}

bool sub_is_simple(const SubmoduleLattice& lat, int id) {
  if (lat.is_zero(id)) return false;
  int inside = 0;
  for (int i = 0; i < lat.count(); ++i)
    if (lat.contains(id, i)) ++inside;
  return inside == 2;
}

bool sub_is_prime(const FiniteModule& m, const Bitset& sub) {
  if (sub.count() <= 1) return false;
  const Ring& R = m.ring();
  // Ann(N) = { r : rN = 0 }
  std::vector<std::int64_t> killers;
  auto members = sub.members();
  for (std::int64_t r = 0; r < R.size(); ++r) {
    bool kills = true;
    for (int x : members)
      if (m.smul(r, x) != m.zero()) {
        kills = false;
        break;
      }
    if (kills) killers.push_back(r);
  }
  Ideal ann = R.ideal_from_elements(killers);
  for (std::int64_t r = 0; r < R.size(); ++r) {
    if (R.ideal_contains_elem(ann, r)) continue;
    for (int x : members)
      if (x != m.zero() && m.smul(r, x) == m.zero()) return false;
  }
  return true;
}

Localization localize(const FiniteModule& m, const std::vector<std::int64_t>& s_elems) {
  const Ring& R = m.ring();
  // validate S: contains 1, excludes 0, multiplicatively closed
  std::vector<char> in_s(R.size(), 0);
  for (auto s : s_elems) {
    if (s < 0 || s >= R.size()) throw std::invalid_argument("S element out of range");
    in_s[s] = 1;
  }
  if (!in_s[R.one()]) throw std::invalid_argument("S must contain 1");
  if (in_s[R.zero_elem()]) throw std::invalid_argument("S must not contain 0");
  for (auto a : s_elems)
    for (auto b : s_elems)
      if (!in_s[R.mul(a, b)])
        throw std::invalid_argument("S is not multiplicatively closed");

  // the unique absorbing idempotent among the powers of prod(S)
  std::int64_t t = R.one();
  for (auto s : s_elems) t = R.mul(t, s);
  std::int64_t e = t;
  for (std::int64_t i = 0; i < R.size() + 1 && !R.is_idempotent(e); ++i) e = R.mul(e, t);
  if (!R.is_idempotent(e)) throw std::logic_error("no idempotent power found");

  // eM over R/(1-e)R
  Ideal one_minus_e = R.ideal_from_elements({R.add(R.one(), R.neg(e))});
  QuotientRing q = quotient_ring(R, one_minus_e);

  Bitset members(m.size());
  for (int x = 0; x < m.size(); ++x) members.set(m.smul(e, x));

  if (q.ring.is_zero()) throw std::logic_error("localization collapsed to the zero ring");
  std::vector<std::int64_t> lift(q.ring.size());
  for (std::int64_t rp = 0; rp < q.ring.size(); ++rp) {
    // any preimage works since (1-e)R kills eM
    std::vector<std::int64_t> res(R.factors(), 0);
    auto rres = q.ring.residues(rp);
    for (std::size_t j = 0; j < q.kept_factors.size(); ++j)
      res[q.kept_factors[j]] = rres[j];
    lift[rp] = R.element(res);
  }
  Localization loc{FiniteModule::subcarrier_over(m, members, q.ring, std::move(lift)),
                   e,
                   {},
                   q};
  loc.elem_map.resize(m.size());
  for (int x = 0; x < m.size(); ++x)
    loc.elem_map[x] = loc.module.from_parent(m.smul(e, x));

  // kernel of the localization map is { x : sx = 0 for some s in S }
  for (int x = 0; x < m.size(); ++x) {
    bool killed = false;
    for (auto s : s_elems)
      if (m.smul(s, x) == m.zero()) {
        killed = true;
        break;
      }
    // the closure of S may kill more than the listed elements; use e itself
    bool in_kernel = (m.smul(e, x) == m.zero());
    if (killed && !in_kernel)
      throw std::logic_error("localization kernel characterization violated");
    if (in_kernel) {
      // must be killed by some power of t, which lies in the closure of S
      bool killed_by_closure = false;
      std::int64_t p = t;
      for (std::int64_t i = 0; i < R.size() + 1; ++i) {
        if (m.smul(p, x) == m.zero()) {
          killed_by_closure = true;
          break;
        }
        p = R.mul(p, t);
      }
      if (!killed_by_closure)
        throw std::logic_error("localization kernel characterization violated");
    }
  }
  return loc;
}

} // namespace ztg
