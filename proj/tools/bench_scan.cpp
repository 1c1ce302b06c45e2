// Times the serial reference scan against the OpenMP kernel on a few
// (field, k, n) configurations and checks that both produce the same table.
//
//   bench_scan [max_threads]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include <omp.h>

#include "ffcensus/kernels.hpp"

using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Case {
  const char* field;
  const char* k;
  unsigned n;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace ffcensus;
  const int max_threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  const Case cases[] = {{"2", "x", 14}, {"2", "x^2+x+1", 16}, {"3", "x", 9}, {"2^2", "0,1", 8}, {"5", "x", 7}};

  std::cout << std::left << std::setw(10) << "field" << std::setw(10) << "k" << std::setw(4) << "n" << std::right
            << std::setw(12) << "serial[s]" << std::setw(9) << "threads" << std::setw(12) << "kernel[s]"
            << std::setw(10) << "speedup" << "  match\n";
  for (const Case& c : cases) {
    const Field field = FieldCtx::parse(c.field);
    const Poly k = parse_poly(field, c.k);

    auto t0 = clock_type::now();
    const kernels::ClassTotals ref = kernels::scan_classes_serial(k, c.n);
    const double serial = seconds_since(t0);

    for (int threads = 1; threads <= max_threads; threads *= 2) {
      t0 = clock_type::now();
      const kernels::ClassTotals fast = kernels::scan_classes_parallel(k, c.n, kDefaultBudget, threads);
      const double kernel = seconds_since(t0);
      std::cout << std::left << std::setw(10) << c.field << std::setw(10) << c.k << std::setw(4) << c.n << std::right
                << std::fixed << std::setprecision(4) << std::setw(12) << serial << std::setw(9) << threads
                << std::setw(12) << kernel << std::setw(10) << std::setprecision(1) << serial / kernel << "  "
                << (fast == ref ? "yes" : "NO") << '\n';
    }
  }
  return 0;
}
