// Compares the OpenMP kernels against their serial references on cases large
// enough to time, and checks that both agree to the last bit.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "wallach/invariants.hpp"
#include "wallach/omega.hpp"
#include "wallach/spaces.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel paths run serially\n");
#endif

  // triple sums on flag spaces past the desk-scale default
  for (int n : {12, 18, 24}) {
    int k = n / 3;
    auto dec = wallach::make_flag_family(wallach::Family::SO, k, k, n - 2 * k, n);
    double a_par = 0.0, a_ser = 0.0;
    double t_par = time_best_of(3, [&] { a_par = wallach::triple_sum(dec, 1, 2, 3); });
    double t_ser =
        time_best_of(3, [&] { a_ser = wallach::triple_sum_serial(dec, 1, 2, 3); });
    std::printf("so(%2d) flag dims (%2d,%2d,%2d): serial %8.4f s  parallel %8.4f s  "
                "speedup %4.2fx  |diff| %.3g\n",
                n, dec.d1, dec.d2, dec.d3, t_ser, t_par, t_ser / t_par,
                std::abs(a_par - a_ser));
    if (std::abs(a_par - a_ser) > 1e-12) {
      std::printf("FAIL: serial and parallel triple sums disagree\n");
      return 1;
    }
  }

  for (int grid : {512, 1024}) {
    std::vector<wallach::SliceSegment> sp, ss;
    double t_par = time_best_of(3, [&] { sp = wallach::surface_slice(0.25, grid); });
    double t_ser =
        time_best_of(3, [&] { ss = wallach::surface_slice_serial(0.25, grid); });
    bool same = sp.size() == ss.size();
    for (std::size_t i = 0; same && i < sp.size(); ++i)
      same = sp[i].a1_start == ss[i].a1_start && sp[i].a2_start == ss[i].a2_start &&
             sp[i].a1_end == ss[i].a1_end && sp[i].a2_end == ss[i].a2_end;
    std::printf("slice a3=1/4 grid %4d (%5zu segs): serial %8.4f s  parallel %8.4f s  "
                "speedup %4.2fx  identical %s\n",
                grid, sp.size(), t_ser, t_par, t_ser / t_par, same ? "yes" : "NO");
    if (!same) {
      std::printf("FAIL: serial and parallel slices differ\n");
      return 1;
    }
  }
  return 0;
}
