#include "doctest.h"

#include <algorithm>
#include <set>

#include "ztg/ring.hpp"

using namespace ztg;

namespace {

// elementwise ideal arithmetic used as the oracle for the divisor forms
std::set<std::int64_t> elems_of(const Ring& R, const Ideal& I) {
  auto v = R.ideal_elements(I);
  return {v.begin(), v.end()};
}

std::set<std::int64_t> brute_product(const Ring& R, const Ideal& I, const Ideal& J) {
  // all finite sums of products; one generator pass plus additive closure
  std::set<std::int64_t> gens;
  for (auto a : R.ideal_elements(I))
    for (auto b : R.ideal_elements(J)) gens.insert(R.mul(a, b));
  std::set<std::int64_t> out = {R.zero_elem()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto x : std::set<std::int64_t>(out))
      for (auto g : gens) {
        auto s = R.add(x, g);
        if (out.insert(s).second) grew = true;
      }
  }
  return out;
}

} // namespace

TEST_CASE("ideal enumeration counts and order") {
  Ring z12({12});
  auto ideals = z12.all_ideals();
  CHECK(ideals.size() == 6); // divisors 1,2,3,4,6,12
  CHECK(std::is_sorted(ideals.begin(), ideals.end()));

  Ring z2({2});
  CHECK(z2.all_ideals().size() == 2);

  Ring z6z2({6, 2});
  CHECK(z6z2.all_ideals().size() == 8);
}

TEST_CASE("idempotents") {
  Ring z12({12});
  CHECK(z12.idempotents() == std::vector<std::int64_t>{0, 1, 4, 9});
  Ring z4({4});
  CHECK(z4.idempotents() == std::vector<std::int64_t>{0, 1});
  Ring z7({7});
  CHECK(z7.idempotents() == std::vector<std::int64_t>{0, 1});

  // e idempotent implies 1-e idempotent and e(1-e) = 0
  for (const Ring& R : {Ring({12}), Ring({6, 2}), Ring({8, 9})}) {
    for (auto e : R.idempotents()) {
      auto f = R.add(R.one(), R.neg(e));
      CHECK(R.is_idempotent(f));
      CHECK(R.mul(e, f) == R.zero_elem());
    }
  }
}

TEST_CASE("nilradical") {
  Ring z12({12});
  CHECK(z12.nilradical() == Ideal({6}));
  Ring z30({30});
  CHECK(z30.nilradical() == Ideal({30})); // reduced: nilradical is (0)
  Ring z5({5});
  CHECK(z5.nilradical() == Ideal({5}));

  // nilradical = intersection of the minimal primes
  for (const Ring& R : {Ring({12}), Ring({30}), Ring({8, 9}), Ring({4, 6})}) {
    Ideal acc = R.unit_ideal();
    for (const auto& p : R.minimal_primes()) acc = R.ideal_intersect(acc, p);
    CHECK(acc == R.nilradical());
  }
}

TEST_CASE("prime ideals") {
  Ring z30({30});
  CHECK(z30.prime_ideals().size() == 3);
  Ring z4({4});
  auto p4 = z4.prime_ideals();
  REQUIRE(p4.size() == 1);
  CHECK(p4[0] == Ideal({2}));
  Ring z6z2({6, 2});
  CHECK(z6z2.prime_ideals().size() == 3);
}

TEST_CASE("ideal arithmetic agrees with elementwise brute force") {
  for (const Ring& R : {Ring({12}), Ring({30})}) {
    auto ideals = R.all_ideals();
    for (const auto& I : ideals)
      for (const auto& J : ideals) {
        CHECK(elems_of(R, R.ideal_product(I, J)) == brute_product(R, I, J));
        // sum and intersection elementwise
        std::set<std::int64_t> su, in;
        for (auto a : R.ideal_elements(I))
          for (auto b : R.ideal_elements(J)) su.insert(R.add(a, b));
        auto ei = elems_of(R, I);
        for (auto b : R.ideal_elements(J))
          if (ei.count(b)) in.insert(b);
        CHECK(elems_of(R, R.ideal_sum(I, J)) == su);
        CHECK(elems_of(R, R.ideal_intersect(I, J)) == in);
      }
  }
}

TEST_CASE("idempotent lifting examples") {
  Ring z12({12});
  CHECK(z12.lift_idempotent(3, Ideal({6})) == 9);
  Ring z6({6});
  CHECK(z6.lift_idempotent(3, Ideal({6})) == 3); // already idempotent, I = (0)
  Ring z4({4});
  CHECK(z4.lift_idempotent(2, Ideal({2})) == 0);

  CHECK_THROWS_AS(z12.lift_idempotent(3, Ideal({2})), std::invalid_argument); // not nil
  CHECK_THROWS_AS(z12.lift_idempotent(2, Ideal({6})), std::invalid_argument); // 2²-2 ∉ I
}

TEST_CASE("idempotent lifting postconditions, exhaustive over small Z_n") {
  for (std::int64_t n : {4, 8, 9, 12, 16, 18, 24, 36, 48, 72, 100}) {
    Ring R({n});
    Ideal nil = R.nilradical();
    for (const auto& I : R.all_ideals()) {
      if (!R.ideal_is_nil(I)) continue;
      for (std::int64_t u = 0; u < n; ++u) {
        auto defect = R.add(R.mul(u, u), R.neg(u));
        if (!R.ideal_contains_elem(I, defect)) continue;
        auto e = R.lift_idempotent(u, I);
        CHECK(R.is_idempotent(e));
        CHECK(R.ideal_contains_elem(I, R.add(e, R.neg(u))));
        bool in_uR = false;
        for (std::int64_t r = 0; r < n; ++r)
          if (R.mul(u, r) == e) in_uR = true;
        CHECK(in_uR);
      }
    }
    (void)nil;
  }
}

TEST_CASE("quotient rings") {
  Ring z12({12});
  auto q = quotient_ring(z12, Ideal({6}));
  CHECK(q.ring.moduli() == std::vector<std::int64_t>{6});
  CHECK(q.project(z12, 7) == 1);

  auto qid = quotient_ring(z12, Ideal({12}));
  CHECK(qid.ring.moduli() == std::vector<std::int64_t>{12});

  Ring z6z2({6, 2});
  auto q2 = quotient_ring(z6z2, Ideal({2, 1}));
  CHECK(q2.ring.moduli() == std::vector<std::int64_t>{2});

  auto qz = quotient_ring(z12, Ideal({1}));
  CHECK(qz.ring.is_zero());
}
