#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ztg/common.hpp"

namespace ztg {

class Ring;

// Ideal of a product of residue rings, in divisor-tuple canonical form:
// (d_1,...,d_k) with d_i | n_i denotes d_1*Z_{n_1} x ... x d_k*Z_{n_k}.
// d_i = 1 is the full component, d_i = n_i the zero component.
class Ideal {
public:
  Ideal() = default;
  explicit Ideal(std::vector<std::int64_t> divisors) : d_(std::move(divisors)) {}

  const std::vector<std::int64_t>& divisors() const { return d_; }
  bool operator==(const Ideal& o) const { return d_ == o.d_; }
  bool operator<(const Ideal& o) const { return d_ < o.d_; } // lex on divisor tuples

private:
  std::vector<std::int64_t> d_;
};

// Finite commutative ring with identity, presented as Z_{n_1} x ... x Z_{n_k}.
// Elements are indices in [0, size()); residue tuples are decoded on demand.
class Ring {
public:
  explicit Ring(std::vector<std::int64_t> moduli);
  static Ring zero_ring() { return Ring(zero_tag{}); }

  bool is_zero() const { return moduli_.empty(); }
  int factors() const { return static_cast<int>(moduli_.size()); }
  std::int64_t size() const { return size_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }

  std::vector<std::int64_t> residues(std::int64_t e) const;
  std::int64_t residue(std::int64_t e, int factor) const;
  std::int64_t element(const std::vector<std::int64_t>& residues) const;

  std::int64_t zero_elem() const { return 0; }
  std::int64_t one() const;
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  bool is_idempotent(std::int64_t e) const { return mul(e, e) == e; }

  std::vector<std::int64_t> idempotents() const;
  Ideal nilradical() const;
  std::vector<Ideal> all_ideals() const;
  std::vector<Ideal> prime_ideals() const;
  std::vector<Ideal> minimal_primes() const { return prime_ideals(); }

  // Idempotent lifting modulo a nil ideal: starting from u with u^2 - u in I,
  // iterate e <- 3e^2 - 2e^3 until fixed. Requires I nil and the residue
  // condition; both are checked.
  std::int64_t lift_idempotent(std::int64_t u, const Ideal& I) const;

  // ideal arithmetic on divisor tuples
  Ideal unit_ideal() const;
  Ideal zero_ideal() const;
  bool ideal_contains(const Ideal& I, const Ideal& J) const; // I >= J
  bool ideal_contains_elem(const Ideal& I, std::int64_t e) const;
  bool ideal_is_nil(const Ideal& I) const;
  Ideal ideal_product(const Ideal& I, const Ideal& J) const;
  Ideal ideal_sum(const Ideal& I, const Ideal& J) const;
  Ideal ideal_intersect(const Ideal& I, const Ideal& J) const;
  Ideal ideal_from_elements(const std::vector<std::int64_t>& elems) const;
  std::vector<std::int64_t> ideal_elements(const Ideal& I) const;
  std::int64_t ideal_generator(const Ideal& I) const;

  std::string elem_str(std::int64_t e) const;
  std::string ideal_str(const Ideal& I) const;

private:
  struct zero_tag {};
  explicit Ring(zero_tag) : size_(1) {}
  void check_ideal(const Ideal& I) const;

  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> strides_;
  std::int64_t size_ = 1;
};

// R/I as a product of residue rings Z_{d_i}, dropping full components.
// Quotient by the unit ideal yields the zero ring (is_zero() on the result).
struct QuotientRing {
  Ring ring;
  std::vector<int> kept_factors; // indices into the source ring's factors
  std::vector<std::int64_t> kept_divisors;

  std::int64_t project(const Ring& src, std::int64_t e) const;
  Ideal project_ideal(const Ring& src, const Ideal& J) const;
};

QuotientRing quotient_ring(const Ring& R, const Ideal& I);

} // namespace ztg
