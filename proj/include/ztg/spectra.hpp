#pragma once

#include <memory>
#include <vector>

#include "ztg/module.hpp"

namespace ztg {

// A module together with everything the topology needs: the full lattice,
// the prime submodules in canonical order, and the table of closed sets
// V(N) = { P in Spec(M) : (P:M) >= (N:M) } as bitsets over the Spec order.
struct ModuleCtx {
  FiniteModule m;
  SubmoduleLattice lat;
  std::vector<int> spec;    // lattice ids of the prime submodules
  std::vector<Bitset> vtab; // per lattice id, V(N) over spec positions

  int spec_size() const { return static_cast<int>(spec.size()); }
  int spec_pos(int lattice_id) const; // -1 if not prime

  static std::shared_ptr<const ModuleCtx> build(FiniteModule mod, const Caps& caps,
                                                bool parallel = true);
  static std::shared_ptr<const ModuleCtx> build_with_lattice(FiniteModule mod,
                                                             SubmoduleLattice lat,
                                                             bool parallel = true);
};

bool is_prime_submodule(const FiniteModule& m, const Bitset& sub, const Ideal& sub_colon);
bool is_prime_submodule(const FiniteModule& m, const Bitset& sub);

// spectrum and V-table kernels; parallel versions with serial references
std::vector<int> spectrum_ids_serial(const FiniteModule& m, const SubmoduleLattice& lat);
std::vector<int> spectrum_ids(const FiniteModule& m, const SubmoduleLattice& lat,
                              bool parallel);
std::vector<Bitset> v_table_serial(const FiniteModule& m, const SubmoduleLattice& lat,
                                   const std::vector<int>& spec);
std::vector<Bitset> v_table(const FiniteModule& m, const SubmoduleLattice& lat,
                            const std::vector<int>& spec, bool parallel);

// V*(N) = { P in Spec(M) : P >= N } (set containment)
Bitset v_star_of(const ModuleCtx& ctx, int id);

// intersection of all primes containing N; the full module if none does
int radical_id(const ModuleCtx& ctx, int id);

// distinct closed sets of Spec(M)
std::vector<Bitset> closed_sets(const ModuleCtx& ctx);

int intersection_id(const ModuleCtx& ctx, const Bitset& t); // lattice id of ∩_{P in T} P
bool is_closed(const ModuleCtx& ctx, const Bitset& t);
// T must be closed; flags non-closed input instead of answering
bool is_irreducible(const ModuleCtx& ctx, const Bitset& t);
std::vector<int> min_members(const ModuleCtx& ctx, const Bitset& t); // lattice ids

// natural map psi(P) = (P:M)/Ann(M); pairs of (spec position, image ideal)
std::vector<std::pair<int, Ideal>> natural_map(const ModuleCtx& ctx);
bool is_primeful(const ModuleCtx& ctx);
bool is_x_injective(const ModuleCtx& ctx);

// A quotient M/N prepared for topology work, with id translation maps.
struct QuotientCtx {
  std::shared_ptr<const ModuleCtx> ctx;
  std::vector<int> to_base;   // quotient lattice id -> base lattice id (preimage)
  std::vector<int> from_base; // base lattice id -> quotient id, or -1
};

QuotientCtx build_quotient_ctx(const std::shared_ptr<const ModuleCtx>& base, int kernel_id,
                               const Caps& caps, bool parallel = true);

// The standing context for a closed non-empty T: Q = (∩P : M)M and M/Q.
struct TContext {
  std::shared_ptr<const ModuleCtx> base;
  Bitset t;               // over spec positions
  std::vector<int> t_ids; // lattice ids of the members of T
  int inter_id = -1;      // ∩_{P in T} P
  int q_id = -1;          // Q
  QuotientCtx mbar;       // M/Q
};

TContext make_t_context(const std::shared_ptr<const ModuleCtx>& base, const Bitset& t,
                        const Caps& caps, bool parallel = true);

// Section-3 style decomposition along an idempotent e (e != 0, 1):
// M_1 = eM, M_2 = (1-e)M, T_i the traces of T, Q_i and the quotients.
struct IdempotentSplit {
  std::int64_t e = 0;
  std::shared_ptr<const ModuleCtx> m1, m2; // subcarrier contexts
  std::vector<int> m1_to_base, m2_to_base; // lattice id translation
  Bitset t1, t2;                           // over the factors' spec positions
  int q1_id = -1, q2_id = -1;              // in the factor lattices
  QuotientCtx mbar1, mbar2;
  bool t1_empty() const { return t1.none(); }
  bool t2_empty() const { return t2.none(); }
};

IdempotentSplit decompose_by_idempotent(const TContext& tc, std::int64_t e,
                                        const Caps& caps, bool parallel = true);

} // namespace ztg
