#include "doctest.h"

#include "ztg/spectra.hpp"

using namespace ztg;

// the OpenMP kernels must agree with their serial references

TEST_CASE("parallel kernels match serial references") {
  Caps caps;
  for (auto mod : {FiniteModule::direct_sum(Ring({60}), {{60}}),
                   FiniteModule::direct_sum(Ring({2}), {{2, 2, 2, 2, 2}}),
                   FiniteModule::direct_sum(Ring({4, 3}), {{2, 4}, {3}}),
                   FiniteModule::direct_sum(Ring({6}), {{2, 3, 6}})}) {
    auto lat = SubmoduleLattice::build(mod, caps, true);
    std::vector<Bitset> masks;
    for (int i = 0; i < lat.count(); ++i) masks.push_back(lat.sub(i).mask);

    auto colons_p = lattice_colons(mod, masks, true);
    auto colons_s = lattice_colons_serial(mod, masks);
    REQUIRE(colons_p.size() == colons_s.size());
    for (std::size_t i = 0; i < colons_p.size(); ++i) CHECK(colons_p[i] == colons_s[i]);

    auto spec_p = spectrum_ids(mod, lat, true);
    auto spec_s = spectrum_ids_serial(mod, lat);
    CHECK(spec_p == spec_s);

    auto vt_p = v_table(mod, lat, spec_p, true);
    auto vt_s = v_table_serial(mod, lat, spec_s);
    REQUIRE(vt_p.size() == vt_s.size());
    for (std::size_t i = 0; i < vt_p.size(); ++i) CHECK(vt_p[i] == vt_s[i]);
  }
}
