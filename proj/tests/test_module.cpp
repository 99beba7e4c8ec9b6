#include "doctest.h"

#include <set>

#include "ztg/module.hpp"

using namespace ztg;

namespace {

const Caps kCaps{};

Bitset mask_of(const FiniteModule& m, std::initializer_list<int> elems) {
  Bitset b(m.size());
  for (int e : elems) b.set(e);
  return b;
}

} // namespace

TEST_CASE("submodule lattice sizes") {
  Caps caps;
  auto z12 = FiniteModule::direct_sum(Ring({12}), {{12}});
  CHECK(SubmoduleLattice::build(z12, caps).count() == 6);

  auto f22 = FiniteModule::direct_sum(Ring({2}), {{2, 2}});
  CHECK(SubmoduleLattice::build(f22, caps).count() == 5);

  auto z2z3 = FiniteModule::direct_sum(Ring({6}), {{2, 3}});
  CHECK(SubmoduleLattice::build(z2z3, caps).count() == 4);
}

TEST_CASE("lattice cap errors") {
  Caps caps;
  caps.max_elements = 8;
  CHECK_THROWS_AS(SubmoduleLattice::build(
                      FiniteModule::direct_sum(Ring({12}), {{12}}), caps),
                  CapExceeded);
  caps = Caps{};
  caps.max_submodules = 3;
  CHECK_THROWS_AS(SubmoduleLattice::build(
                      FiniteModule::direct_sum(Ring({2}), {{2, 2}}), caps),
                  CapExceeded);
}

TEST_CASE("colon ideals") {
  auto z12 = FiniteModule::direct_sum(Ring({12}), {{12}});
  auto lat = SubmoduleLattice::build(z12, kCaps);
  // 4Z_12 = {0,4,8}
  int id = lat.require_id(mask_of(z12, {0, 4, 8}));
  CHECK(lat.colon_of(id) == Ideal({4}));
  CHECK(lat.colon_of(lat.full_id()) == Ideal({1}));

  auto z2z3 = FiniteModule::direct_sum(Ring({6}), {{2, 3}});
  auto lat2 = SubmoduleLattice::build(z2z3, kCaps);
  // Z_2 ⊕ 0 = elements with zero second block: indices {0,3} (stride 3)
  int z2part = lat2.require_id(mask_of(z2z3, {0, 3}));
  CHECK(lat2.colon_of(z2part) == Ideal({3}));
}

TEST_CASE("annihilator examples") {
  auto z3_over_z6 = FiniteModule::direct_sum(Ring({6}), {{3}});
  // Ann = {0,3} = (3); oracle scan over the ring
  CHECK(annihilator(z3_over_z6) == Ideal({3}));
  CHECK(!is_faithful(z3_over_z6));
  auto lat = SubmoduleLattice::build(z3_over_z6, kCaps);
  CHECK(is_simple(z3_over_z6, lat));
}

TEST_CASE("products") {
  auto z12 = FiniteModule::direct_sum(Ring({12}), {{12}});
  auto lat = SubmoduleLattice::build(z12, kCaps);
  Bitset n4 = mask_of(z12, {0, 4, 8});
  Bitset n3 = mask_of(z12, {0, 3, 6, 9});
  Bitset n2 = mask_of(z12, {0, 2, 4, 6, 8, 10});
  CHECK(product_mask(z12, n4, n3).count() == 1); // (4)(3) = (12) = 0
  CHECK(product_mask(z12, n2, n2) == n4);        // (2)(2) = (4)
  Bitset full(z12.size());
  full.set_all();
  CHECK(product_mask(z12, full, full) == full);

  // commutativity and product(N, M) = (N:M)M over the whole lattice
  for (int i = 0; i < lat.count(); ++i) {
    for (int j = 0; j < lat.count(); ++j)
      CHECK(product_mask(z12, lat.sub(i).mask, lat.sub(j).mask) ==
            product_mask(z12, lat.sub(j).mask, lat.sub(i).mask));
    CHECK(product_mask(z12, lat.sub(i).mask, full) ==
          ideal_times_module(z12, lat.colon_of(i)));
    // (N:M)M <= N always
    CHECK(ideal_times_module(z12, lat.colon_of(i)).is_subset_of(lat.sub(i).mask));
  }
}

TEST_CASE("quotient modules") {
  Caps caps;
  auto z12 = FiniteModule::direct_sum(Ring({12}), {{12}});
  auto lat = SubmoduleLattice::build(z12, caps);
  Bitset k6 = mask_of(z12, {0, 6});
  auto q = FiniteModule::quotient(z12, k6);
  CHECK(q.size() == 6);
  CHECK(is_cyclic(q));
  // |M| = |Q| * |M/Q| and the projection is additive
  CHECK(z12.size() == 2 * q.size());
  for (int a = 0; a < z12.size(); ++a)
    for (int b = 0; b < z12.size(); ++b)
      CHECK(q.from_parent(z12.add(a, b)) == q.add(q.from_parent(a), q.from_parent(b)));

  auto qlat = SubmoduleLattice::for_quotient(q, lat, caps);
  CHECK(qlat.count() == 4); // divisors of 6

  // quotient by zero is the identity
  auto q0 = FiniteModule::quotient(z12, mask_of(z12, {0}));
  CHECK(q0.size() == 12);
  for (int a = 0; a < 12; ++a) CHECK(q0.to_parent(a) == a);

  auto z2z3 = FiniteModule::direct_sum(Ring({6}), {{2, 3}});
  auto q2 = FiniteModule::quotient(z2z3, mask_of(z2z3, {0, 1, 2}));
  CHECK(q2.size() == 2);
}

TEST_CASE("module predicates") {
  Caps caps;
  auto z12 = FiniteModule::direct_sum(Ring({12}), {{12}});
  auto lat12 = SubmoduleLattice::build(z12, caps);
  CHECK(is_multiplication(z12, lat12));
  CHECK(is_cyclic(z12));
  CHECK(is_faithful(z12));
  CHECK(!is_prime_module(z12));

  auto f22 = FiniteModule::direct_sum(Ring({2}), {{2, 2}});
  auto lat22 = SubmoduleLattice::build(f22, caps);
  CHECK(is_prime_module(f22));
  CHECK(!is_multiplication(f22, lat22));
  CHECK(is_semiprime_module(f22, lat22));

  auto z4 = FiniteModule::direct_sum(Ring({4}), {{4}});
  auto lat4 = SubmoduleLattice::build(z4, caps);
  CHECK(!is_semiprime_module(z4, lat4));
}

TEST_CASE("re-closing a lattice member is a no-op") {
  Caps caps;
  for (auto m : {FiniteModule::direct_sum(Ring({12}), {{12}}),
                 FiniteModule::direct_sum(Ring({6}), {{2, 3}}),
                 FiniteModule::direct_sum(Ring({2}), {{2, 2}})}) {
    auto lat = SubmoduleLattice::build(m, caps);
    for (int i = 0; i < lat.count(); ++i)
      CHECK(close_under_add(m, lat.sub(i).elems) == lat.sub(i).mask);
  }
}

TEST_CASE("localization") {
  auto z30 = FiniteModule::direct_sum(Ring({30}), {{30}});
  auto loc = localize(z30, {1, 5, 25});
  CHECK(loc.e == 25);
  CHECK(loc.module.size() == 6);
  CHECK(loc.qring.ring.moduli() == std::vector<std::int64_t>{6});

  auto idloc = localize(z30, {1});
  CHECK(idloc.e == 1);
  CHECK(idloc.module.size() == 30);

  auto z12 = FiniteModule::direct_sum(Ring({12}), {{12}});
  auto loc12 = localize(z12, {1, 4});
  CHECK(loc12.e == 4);
  CHECK(loc12.module.size() == 3);

  CHECK_THROWS_AS(localize(z12, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(localize(z12, {1, 2}), std::invalid_argument); // not closed: 2*2=4 missing
  CHECK_THROWS_AS(localize(z12, {4}), std::invalid_argument);    // missing 1
}

TEST_CASE("localization kernel characterization exhaustively") {
  // kernel of m -> em equals { m : sm = 0 for some s in the closure of S }
  auto z12 = FiniteModule::direct_sum(Ring({12}), {{12}});
  auto loc = localize(z12, {1, 4});
  for (int x = 0; x < z12.size(); ++x) {
    bool killed = z12.smul(loc.e, x) == 0;
    bool by_s = z12.smul(4, x) == 0 || z12.smul(4, z12.smul(4, x)) == 0;
    CHECK(killed == by_s);
  }
}

TEST_CASE("minimal generators and labels") {
  auto z12 = FiniteModule::direct_sum(Ring({12}), {{12}});
  CHECK(submodule_label(z12, mask_of(z12, {0})) == "0");
  Bitset full(z12.size());
  full.set_all();
  CHECK(submodule_label(z12, full) == "M");
  CHECK(submodule_label(z12, mask_of(z12, {0, 4, 8})) == "<(4)>");
  CHECK(submodule_label(z12, mask_of(z12, {0, 2, 4, 6, 8, 10})) == "<(2)>");
}
