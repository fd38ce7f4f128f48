// Timing comparison of the serial reference kernels against their
// OpenMP counterparts on circle grids of increasing size.

#include <chrono>
#include <complex>
#include <cstdio>
#include <vector>

#include "cmvres/grid_kernels.hpp"
#include "cmvres/harness.hpp"
#include "cmvres/jost.hpp"
#include "cmvres/parallel.hpp"
#include "cmvres/resonances.hpp"

using Clock = std::chrono::steady_clock;
using cmvres::Complex;

namespace {

template <typename F>
double time_ms(F&& fn, int reps) {
  const auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count() /
         reps;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", cmvres::thread_cap());

  const cmvres::ClassParams params(2.0, 2.0, 4.0);
  const auto seq = cmvres::sample_class_member(params, 8, 42);
  const auto pi = cmvres::pi_polynomial(seq);
  const auto set = cmvres::find_resonances(pi);

  std::vector<Complex> zeros;
  std::vector<int> mults;
  for (const auto& e : set.zeros) {
    zeros.push_back(e.location);
    mults.push_back(e.multiplicity);
  }

  std::printf("%-10s %-16s %12s %12s %8s\n", "kernel", "grid", "serial(ms)",
              "omp(ms)", "speedup");
  for (std::size_t m : {1u << 14, 1u << 16, 1u << 18}) {
    const auto pts = cmvres::kernels::unit_circle_points(m);
    std::vector<Complex> out_s, out_p;

    const double ts = time_ms(
        [&] { cmvres::kernels::pi_product_serial(zeros, mults, pts, out_s); }, 5);
    const double tp = time_ms(
        [&] { cmvres::kernels::pi_product_parallel(zeros, mults, pts, out_p); }, 5);
    std::printf("%-10s %-16zu %12.3f %12.3f %8.2f\n", "pi_prod", m, ts, tp,
                ts / tp);

    const double es = time_ms(
        [&] { cmvres::kernels::poly_eval_serial(pi, pts, out_s); }, 5);
    const double ep = time_ms(
        [&] { cmvres::kernels::poly_eval_parallel(pi, pts, out_p); }, 5);
    std::printf("%-10s %-16zu %12.3f %12.3f %8.2f\n", "poly_eval", m, es, ep,
                es / ep);

    const Complex a(0.3, -0.2);
    const double ss = time_ms(
        [&] { cmvres::kernels::schur_map_serial(a, pts, out_s); }, 5);
    const double sp = time_ms(
        [&] { cmvres::kernels::schur_map_parallel(a, pts, out_p); }, 5);
    std::printf("%-10s %-16zu %12.3f %12.3f %8.2f\n", "schur_map", m, ss, sp,
                ss / sp);
  }
  return 0;
}
