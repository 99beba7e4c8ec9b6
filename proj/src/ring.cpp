#include "ztg/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ztg {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// product of the distinct prime divisors
std::int64_t squarefree_radical(std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r *= p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r *= n;
  return r;
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

} // namespace

Ring::Ring(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("ring needs at least one factor");
  for (auto n : moduli_)
    if (n < 2) throw std::invalid_argument("ring moduli must be >= 2");
  strides_.resize(moduli_.size());
  std::int64_t s = 1;
  for (int i = factors() - 1; i >= 0; --i) {
    strides_[i] = s;
    if (s > (std::int64_t{1} << 31) / moduli_[i])
      throw std::invalid_argument("ring too large");
    s *= moduli_[i];
  }
  size_ = s;
}

std::vector<std::int64_t> Ring::residues(std::int64_t e) const {
  std::vector<std::int64_t> r(factors());
  for (int i = 0; i < factors(); ++i) r[i] = (e / strides_[i]) % moduli_[i];
  return r;
}

std::int64_t Ring::residue(std::int64_t e, int i) const {
  return (e / strides_[i]) % moduli_[i];
}

std::int64_t Ring::element(const std::vector<std::int64_t>& res) const {
  if (static_cast<int>(res.size()) != factors())
    throw std::invalid_argument("residue tuple arity mismatch");
  std::int64_t e = 0;
  for (int i = 0; i < factors(); ++i) {
    std::int64_t a = res[i] % moduli_[i];
    if (a < 0) a += moduli_[i];
    e += a * strides_[i];
  }
  return e;
}

std::int64_t Ring::one() const {
  std::int64_t e = 0;
  for (int i = 0; i < factors(); ++i) e += strides_[i];
  return e;
}

std::int64_t Ring::add(std::int64_t a, std::int64_t b) const {
  std::int64_t e = 0;
  for (int i = 0; i < factors(); ++i) {
    std::int64_t x = residue(a, i) + residue(b, i);
    if (x >= moduli_[i]) x -= moduli_[i];
    e += x * strides_[i];
  }
  return e;
}

std::int64_t Ring::neg(std::int64_t a) const {
  std::int64_t e = 0;
  for (int i = 0; i < factors(); ++i) {
    std::int64_t x = residue(a, i);
    if (x) x = moduli_[i] - x;
    e += x * strides_[i];
  }
  return e;
}

std::int64_t Ring::mul(std::int64_t a, std::int64_t b) const {
  std::int64_t e = 0;
  for (int i = 0; i < factors(); ++i) {
    std::int64_t x = (residue(a, i) * residue(b, i)) % moduli_[i];
    e += x * strides_[i];
  }
  return e;
}

std::vector<std::int64_t> Ring::idempotents() const {
  std::vector<std::int64_t> out;
  for (std::int64_t e = 0; e < size_; ++e)
    if (is_idempotent(e)) out.push_back(e);
  return out;
}

Ideal Ring::nilradical() const {
  std::vector<std::int64_t> d(factors());
  for (int i = 0; i < factors(); ++i) d[i] = squarefree_radical(moduli_[i]);
  return Ideal(std::move(d));
}

std::vector<Ideal> Ring::all_ideals() const {
  std::vector<std::vector<std::int64_t>> per_factor;
  per_factor.reserve(factors());
  for (auto n : moduli_) per_factor.push_back(divisors_of(n));
  std::vector<Ideal> out;
  std::vector<std::int64_t> cur(factors());
  // odometer over divisor choices; emits lexicographically sorted tuples
  std::vector<std::size_t> idx(factors(), 0);
  while (true) {
    for (int i = 0; i < factors(); ++i) cur[i] = per_factor[i][idx[i]];
    out.emplace_back(cur);
    int i = factors() - 1;
    while (i >= 0 && ++idx[i] == per_factor[i].size()) idx[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ideal> Ring::prime_ideals() const {
  std::vector<Ideal> out;
  for (int i = 0; i < factors(); ++i) {
    for (auto p : prime_divisors(moduli_[i])) {
      std::vector<std::int64_t> d(factors(), 1);
      d[i] = p;
      out.emplace_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Ring::check_ideal(const Ideal& I) const {
  if (static_cast<int>(I.divisors().size()) != factors())
    throw std::invalid_argument("ideal arity mismatch");
  for (int i = 0; i < factors(); ++i) {
    std::int64_t d = I.divisors()[i];
    if (d < 1 || moduli_[i] % d != 0)
      throw std::invalid_argument("ideal divisor does not divide the modulus");
  }
}

Ideal Ring::unit_ideal() const { return Ideal(std::vector<std::int64_t>(factors(), 1)); }
Ideal Ring::zero_ideal() const { return Ideal(moduli_); }

bool Ring::ideal_contains(const Ideal& I, const Ideal& J) const {
  for (int i = 0; i < factors(); ++i)
    if (J.divisors()[i] % I.divisors()[i] != 0) return false;
  return true;
}

bool Ring::ideal_contains_elem(const Ideal& I, std::int64_t e) const {
  for (int i = 0; i < factors(); ++i)
    if (residue(e, i) % I.divisors()[i] != 0) return false;
  return true;
}

bool Ring::ideal_is_nil(const Ideal& I) const {
  return ideal_contains(nilradical(), I);
}

Ideal Ring::ideal_product(const Ideal& I, const Ideal& J) const {
  std::vector<std::int64_t> d(factors());
  for (int i = 0; i < factors(); ++i)
    d[i] = gcd64(I.divisors()[i] * J.divisors()[i], moduli_[i]);
  return Ideal(std::move(d));
}

Ideal Ring::ideal_sum(const Ideal& I, const Ideal& J) const {
  std::vector<std::int64_t> d(factors());
  for (int i = 0; i < factors(); ++i) d[i] = gcd64(I.divisors()[i], J.divisors()[i]);
  return Ideal(std::move(d));
}

Ideal Ring::ideal_intersect(const Ideal& I, const Ideal& J) const {
  std::vector<std::int64_t> d(factors());
  for (int i = 0; i < factors(); ++i)
    d[i] = I.divisors()[i] / gcd64(I.divisors()[i], J.divisors()[i]) * J.divisors()[i];
  return Ideal(std::move(d));
}

Ideal Ring::ideal_from_elements(const std::vector<std::int64_t>& elems) const {
  std::vector<std::int64_t> d(moduli_);
  for (auto e : elems)
    for (int i = 0; i < factors(); ++i) d[i] = gcd64(d[i], residue(e, i));
  for (int i = 0; i < factors(); ++i)
    if (d[i] == 0) d[i] = moduli_[i]; // all-zero component
  return Ideal(std::move(d));
}

std::vector<std::int64_t> Ring::ideal_elements(const Ideal& I) const {
  check_ideal(I);
  std::vector<std::int64_t> out;
  for (std::int64_t e = 0; e < size_; ++e)
    if (ideal_contains_elem(I, e)) out.push_back(e);
  return out;
}

std::int64_t Ring::ideal_generator(const Ideal& I) const {
  check_ideal(I);
  std::vector<std::int64_t> res(factors());
  for (int i = 0; i < factors(); ++i) res[i] = I.divisors()[i] % moduli_[i];
  return element(res);
}

std::int64_t Ring::lift_idempotent(std::int64_t u, const Ideal& I) const {
  check_ideal(I);
  if (!ideal_is_nil(I)) throw std::invalid_argument("lift_idempotent: ideal is not nil");
  std::int64_t defect = add(mul(u, u), neg(u));
  if (!ideal_contains_elem(I, defect))
    throw std::invalid_argument("lift_idempotent: u is not idempotent mod I");

  std::int64_t e = u;
  for (int iter = 0; iter < 64; ++iter) {
    // 3e^2 - 2e^3 componentwise
    std::int64_t next = 0;
    for (int i = 0; i < factors(); ++i) {
      std::int64_t n = moduli_[i];
      std::int64_t x = residue(e, i);
      std::int64_t x2 = (x * x) % n;
      std::int64_t x3 = (x2 * x) % n;
      std::int64_t v = ((3 * x2 - 2 * x3) % n + n) % n;
      next += v * strides_[i];
    }
    if (next == e) break;
    e = next;
  }
  if (!is_idempotent(e))
    throw std::logic_error("lift_idempotent: iteration did not converge");
  // e must lie in uR: per factor, u_i * r = e_i is solvable iff gcd(u_i, n_i) | e_i
  for (int i = 0; i < factors(); ++i) {
    std::int64_t g = gcd64(residue(u, i), moduli_[i]);
    if (g == 0) g = moduli_[i];
    if (residue(e, i) % g != 0)
      throw std::logic_error("lift_idempotent: lift escaped uR");
  }
  if (!ideal_contains_elem(I, add(e, neg(u))))
    throw std::logic_error("lift_idempotent: e - u is not in I");
  return e;
}

std::string Ring::elem_str(std::int64_t e) const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < factors(); ++i) {
    if (i) os << ',';
    os << residue(e, i);
  }
  os << ')';
  return os.str();
}

std::string Ring::ideal_str(const Ideal& I) const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < factors(); ++i) {
    if (i) os << ',';
    os << I.divisors()[i];
  }
  os << ']';
  return os.str();
}

QuotientRing quotient_ring(const Ring& R, const Ideal& I) {
  QuotientRing q{Ring::zero_ring(), {}, {}};
  std::vector<std::int64_t> moduli;
  for (int i = 0; i < R.factors(); ++i) {
    std::int64_t d = I.divisors()[i];
    if (d > 1) {
      moduli.push_back(d);
      q.kept_factors.push_back(i);
      q.kept_divisors.push_back(d);
    }
  }
  if (!moduli.empty()) q.ring = Ring(std::move(moduli));
  return q;
}

std::int64_t QuotientRing::project(const Ring& src, std::int64_t e) const {
  if (ring.is_zero()) return 0;
  std::vector<std::int64_t> res(kept_factors.size());
  for (std::size_t j = 0; j < kept_factors.size(); ++j)
    res[j] = src.residue(e, kept_factors[j]) % kept_divisors[j];
  return ring.element(res);
}

Ideal QuotientRing::project_ideal(const Ring& src, const Ideal& J) const {
  (void)src;
  std::vector<std::int64_t> d(kept_factors.size());
  for (std::size_t j = 0; j < kept_factors.size(); ++j)
    d[j] = std::gcd(J.divisors()[kept_factors[j]], kept_divisors[j]);
  return Ideal(std::move(d));
}

} // namespace ztg
