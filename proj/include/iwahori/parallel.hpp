#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

// OpenMP pragmas compile away when the library is built without OpenMP.
#ifdef _OPENMP
#define IWAHORI_OMP_PARALLEL _Pragma("omp parallel")
#define IWAHORI_OMP_FOR_DYNAMIC _Pragma("omp for schedule(dynamic, 1)")
#define IWAHORI_OMP_CRITICAL _Pragma("omp critical")
#else
#define IWAHORI_OMP_PARALLEL
#define IWAHORI_OMP_FOR_DYNAMIC
#define IWAHORI_OMP_CRITICAL
#endif

namespace iwahori::parallel {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace iwahori::parallel
