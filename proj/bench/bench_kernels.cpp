// Serial versus OpenMP polynomial kernels.

#include <chrono>
#include <cstdio>
#include <functional>

#include "superhopf/kernels.hpp"
#include "superhopf/text.hpp"

#include <omp.h>

using namespace superhopf;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, const std::function<void()>& serial, const std::function<void()>& parallel, int reps) {
  double s = time_ms(serial, reps), p = time_ms(parallel, reps);
  std::printf("%-28s %10.2f %10.2f %8.2fx\n", name, s, p, s / p);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");
  const auto I = parse_set_supercomposition("{1,2}|{0}|{0,3}|{4}");
  const auto J = parse_set_supercomposition("{0,2}|{1,3}");
  const auto P = parse_set_supercomposition("{0,2,4}|{0,3}|{1}|{5}");
  const std::size_t N = 10;
  row("expand M (4 blocks, N=10)", [&] { kernels::expand_M_serial(I, N); }, [&] { kernels::expand_M_parallel(I, N); }, 5);
  row("expand m (4 blocks, N=10)", [&] { kernels::expand_m_serial(P, N); }, [&] { kernels::expand_m_parallel(P, N); }, 5);
  const auto f = kernels::expand_M_serial(I, N);
  const auto g = kernels::expand_M_serial(J, N);
  row("multiply (N=10)", [&] { kernels::multiply_serial(f, g); }, [&] { kernels::multiply_parallel(f, g); }, 1);
  return 0;
}
