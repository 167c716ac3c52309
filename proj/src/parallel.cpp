#include "magma/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace magma {

int max_workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(int count, int workers, const std::function<void(int)>& fn) {
#ifdef _OPENMP
  if (workers > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
#else
  (void)workers;
#endif
  for (int i = 0; i < count; ++i) fn(i);
}

}  // namespace magma
