// Serial vs OpenMP timings for the lattice-wide kernels and a sweep slice.

#include <chrono>
#include <cstdio>
#include <vector>

#include "ztg/verifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ztg;

namespace {

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Case {
  const char* name;
  FiniteModule m;
};

void bench_kernels(const Case& c) {
  Caps caps;
  caps.max_submodules = 100000;
  auto lat = SubmoduleLattice::build(c.m, caps, false);
  std::vector<Bitset> masks;
  for (int i = 0; i < lat.count(); ++i) masks.push_back(lat.sub(i).mask);

  double t0 = now();
  auto colons_s = lattice_colons_serial(c.m, masks);
  double t1 = now();
  auto colons_p = lattice_colons(c.m, masks, true);
  double t2 = now();

  auto spec_s_t0 = now();
  auto spec_s = spectrum_ids_serial(c.m, lat);
  double t3 = now();
  auto spec_p = spectrum_ids(c.m, lat, true);
  double t4 = now();

  double vt0 = now();
  auto vt_s = v_table_serial(c.m, lat, spec_s);
  double vt1 = now();
  auto vt_p = v_table(c.m, lat, spec_p, true);
  double vt2 = now();

  bool same = colons_s == colons_p && spec_s == spec_p && vt_s == vt_p;
  std::printf("%-28s lattice=%5d  colon %8.3f/%8.3f ms  spectrum %8.3f/%8.3f ms  "
              "v-table %8.3f/%8.3f ms  %s\n",
              c.name, lat.count(), (t1 - t0) * 1e3, (t2 - t1) * 1e3,
              (t3 - spec_s_t0) * 1e3, (t4 - t3) * 1e3, (vt1 - vt0) * 1e3,
              (vt2 - vt1) * 1e3, same ? "match" : "MISMATCH");
}

void bench_sweep() {
  Caps caps;
  caps.max_elements = 48;
  auto fam = expand_family("products:max=48", caps);
  SweepOptions opt;
  opt.theorems = {"R2.1", "T4.4", "P4.8"};

  opt.parallel = false;
  double t0 = now();
  auto s1 = sweep(fam, opt);
  double t1 = now();
  opt.parallel = true;
  auto s2 = sweep(fam, opt);
  double t2 = now();
  std::printf("sweep products:max=48 (%lld reports): serial %.2f s, parallel %.2f s "
              "(failed: %lld/%lld)\n",
              static_cast<long long>(s1.total), t1 - t0, t2 - t1,
              static_cast<long long>(s1.failed), static_cast<long long>(s2.failed));
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif
  Case cases[] = {
      {"F_2^6 over Z_2", FiniteModule::direct_sum(Ring({2}), {{2, 2, 2, 2, 2, 2}})},
      {"F_3^4 over Z_3", FiniteModule::direct_sum(Ring({3}), {{3, 3, 3, 3}})},
      {"Z_2^4 x Z_4 over Z_4", FiniteModule::direct_sum(Ring({4}), {{2, 2, 2, 2, 4}})},
      {"Z_60 over Z_60", FiniteModule::direct_sum(Ring({60}), {{60}})},
  };
  for (const auto& c : cases) bench_kernels(c);
  bench_sweep();
  return 0;
}
