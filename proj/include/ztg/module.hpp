#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ztg/bitset.hpp"
#include "ztg/common.hpp"
#include "ztg/ring.hpp"

namespace ztg {

// A finite unital module over a Ring. Elements are indices in [0, size()).
// Three realizations share one carrier interface:
//   - direct sum of cyclic blocks, grouped per ring factor (the root form),
//   - quotient by a submodule (elements are least coset representatives),
//   - a submodule of a parent reused as a carrier (optionally over a
//     quotient ring, which is how localizations are realized).
class FiniteModule {
public:
  enum class Kind { Root, Quotient, Subcarrier };

  static FiniteModule direct_sum(Ring R, std::vector<std::vector<std::int64_t>> blocks);
  static FiniteModule quotient(const FiniteModule& parent, const Bitset& kernel);
  static FiniteModule subcarrier(const FiniteModule& parent, const Bitset& members);
  // Subcarrier over a quotient ring; scalars act through lifted representatives.
  static FiniteModule subcarrier_over(const FiniteModule& parent, const Bitset& members,
                                      Ring ring, std::vector<std::int64_t> ring_lift);

  Kind kind() const { return d_->kind; }
  const Ring& ring() const { return d_->ring; }
  int size() const { return d_->n; }
  bool is_zero_module() const { return d_->n == 1; }

  int zero() const { return 0; }
  int add(int a, int b) const;
  int neg(int a) const;
  int smul(std::int64_t r, int m) const;

  // maps for derived realizations (identity on roots)
  int to_parent(int local) const;
  int from_parent(int parent) const; // quotient: coset class; subcarrier: -1 if outside
  bool has_parent() const { return d_->parent != nullptr; }
  FiniteModule parent() const { return FiniteModule(d_->parent); }

  // flattened residue tuple of the underlying root representative
  std::vector<std::int64_t> label_tuple(int m) const;
  // inverse of label_tuple for root modules (strict: residues in range)
  int element_of_tuple(const std::vector<std::int64_t>& tuple) const;
  std::string elem_str(int m) const;

  bool same_carrier(const FiniteModule& o) const { return d_ == o.d_; }

private:
  struct Data;
  std::shared_ptr<const Data> d_;
  explicit FiniteModule(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  struct Data {
    Kind kind = Kind::Root;
    Ring ring = Ring::zero_ring();
    int n = 1;
    // root form
    std::vector<int> block_factor;          // ring factor of each block
    std::vector<std::int64_t> block_order;  // cyclic order of each block
    std::vector<std::int64_t> stride;
    std::vector<std::vector<std::int64_t>> ring_residues; // |R| x factors, scalar decode
    // derived forms
    std::shared_ptr<const Data> parent;
    std::vector<int> to_parent;   // local -> parent element
    std::vector<int> from_parent; // parent element -> local (or -1)
    std::vector<std::int64_t> ring_lift; // subcarrier_over: R' element -> parent ring element
    // lookup tables for small carriers
    std::vector<std::int32_t> add_table;  // n x n
    std::vector<std::int32_t> smul_table; // |R| x n
  };
  static int add_impl(const Data& d, int a, int b);
  static int neg_impl(const Data& d, int a);
  static int smul_impl(const Data& d, std::int64_t r, int a);
  static void build_tables(Data& d);
};

// Canonical submodule value: sorted element list plus membership mask.
struct Submodule {
  std::vector<int> elems;
  Bitset mask;
};

Submodule make_submodule(const FiniteModule& m, const Bitset& mask);

// additive closure of a seed set (always contains zero); closed sets are
// automatically submodules over residue-ring scalars
Bitset close_under_add(const FiniteModule& m, const std::vector<int>& seed);

Bitset sum_mask(const FiniteModule& m, const Bitset& a, const Bitset& b);

// (N : M) = { r in R : rM <= N }, canonical divisor form
Ideal colon(const FiniteModule& m, const Bitset& sub);
Ideal annihilator(const FiniteModule& m);

// I*M for an ideal I (principal in these rings, so one generator pass)
Bitset ideal_times_module(const FiniteModule& m, const Ideal& I);
// I*N for a submodule N
Bitset ideal_times_sub(const FiniteModule& m, const Ideal& I, const Bitset& sub);
// product of submodules relative to the explicit ambient module:
// N*K = (N:M)(K:M)M
Bitset product_mask(const FiniteModule& m, const Bitset& a, const Bitset& b);

std::vector<int> minimal_generators(const FiniteModule& m, const Bitset& sub);
std::string submodule_label(const FiniteModule& m, const Bitset& sub);

// Complete submodule lattice in canonical order (lex on element lists),
// with every colon ideal precomputed.
class SubmoduleLattice {
public:
  int count() const { return static_cast<int>(subs_.size()); }
  const Submodule& sub(int id) const { return subs_[id]; }
  const Ideal& colon_of(int id) const { return colons_[id]; }
  int zero_id() const { return zero_id_; }
  int full_id() const { return full_id_; }

  int id_of(const Bitset& mask) const; // -1 if absent
  int require_id(const Bitset& mask) const;
  bool contains(int outer, int inner) const {
    return subs_[inner].mask.is_subset_of(subs_[outer].mask);
  }
  bool is_proper(int id) const { return id != full_id_; }
  bool is_zero(int id) const { return id == zero_id_; }

  static SubmoduleLattice build(const FiniteModule& m, const Caps& caps,
                                bool parallel = true);
  // derived lattices reuse the parent's enumeration
  static SubmoduleLattice for_quotient(const FiniteModule& q,
                                       const SubmoduleLattice& parent_lat,
                                       const Caps& caps, bool parallel = true);
  static SubmoduleLattice for_subcarrier(const FiniteModule& s,
                                         const SubmoduleLattice& parent_lat,
                                         const Caps& caps, bool parallel = true);

private:
  void finalize(const FiniteModule& m, std::vector<Bitset> masks, const Caps& caps,
                bool parallel);
  std::vector<Submodule> subs_;
  std::vector<Ideal> colons_;
  std::unordered_map<Bitset, int, BitsetHash> index_;
  int zero_id_ = -1;
  int full_id_ = -1;
};

// kernels with serial reference implementations (see also spectra.hpp)
std::vector<Ideal> lattice_colons(const FiniteModule& m, const std::vector<Bitset>& masks,
                                  bool parallel);
std::vector<Ideal> lattice_colons_serial(const FiniteModule& m,
                                         const std::vector<Bitset>& masks);

// module-class predicates evaluated from the definitions
bool is_faithful(const FiniteModule& m);
bool is_simple(const FiniteModule& m, const SubmoduleLattice& lat);
bool is_cyclic(const FiniteModule& m);
bool is_prime_module(const FiniteModule& m);
bool is_semiprime_module(const FiniteModule& m, const SubmoduleLattice& lat);
bool is_multiplication(const FiniteModule& m, const SubmoduleLattice& lat);

// predicates for a submodule viewed as a module in its own right
bool sub_is_simple(const SubmoduleLattice& lat, int id);
bool sub_is_prime(const FiniteModule& m, const Bitset& sub);

// Localization at a multiplicative set S (1 in S, 0 not in S). In a finite
// ring the powers of the product of S contain a unique idempotent e; the
// localized module is eM over the quotient ring R/(1-e)R.
struct Localization {
  FiniteModule module;
  std::int64_t e = 0;              // the absorbing idempotent of S
  std::vector<int> elem_map;       // parent element -> localized element
  QuotientRing qring;              // R -> R/(1-e)R bookkeeping
};

Localization localize(const FiniteModule& m, const std::vector<std::int64_t>& s_elems);

} // namespace ztg
