// Compares the serial reference search (jobs=1) against the OpenMP-parallel
// kernel on a few order-8 instances and checks that the counts agree.

#include <cstdlib>
#include <iostream>

#include "autocount/counting.hpp"
#include "autocount/table.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace autocount;

int main(int argc, char** argv) {
  int jobs = 0;
#ifdef _OPENMP
  jobs = omp_get_max_threads();
#endif
  if (argc > 1) jobs = std::atoi(argv[1]);
  if (jobs < 2) jobs = 2;

  std::cout << "serial reference vs " << jobs << "-way OpenMP kernel\n";
  bool ok = true;
  for (const TableEntry& e : reference_table()) {
    if (mpz_class(e.delta) > 50000000) continue;  // keep the run short
    Isotopism t(permutation_from_cycle_structure(e.la), permutation_from_cycle_structure(e.lb),
                permutation_from_cycle_structure(e.lg));
    CountReport serial = count_ls(t, CountOptions{1, 0});
    CountReport parallel = count_ls(t, CountOptions{jobs, 0});
    bool agree = serial.delta == parallel.delta;
    ok = ok && agree;
    std::cout << "n=" << e.n << " la=" << to_string(e.la) << " lg=" << to_string(e.lg)
              << " delta=" << serial.delta.get_str() << "  serial " << serial.elapsed_ms
              << " ms, parallel " << parallel.elapsed_ms << " ms"
              << (agree ? "" : "  COUNT DISAGREEMENT") << '\n';
  }
  return ok ? 0 : 1;
}
