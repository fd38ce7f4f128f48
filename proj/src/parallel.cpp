#include "cmvres/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmvres {

int thread_cap() {
  int cap = 1;
#ifdef _OPENMP
  cap = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("CMVRES_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1 && n < cap) cap = n;
  }
  return cap < 1 ? 1 : cap;
}

}  // namespace cmvres
