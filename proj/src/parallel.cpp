#include "wcde/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wcde {

namespace {
int g_threads = 0;
}

void set_threads(int n) {
  if (n <= 0) {
    if (const char* env = std::getenv("WCDE_THREADS")) {
      try {
        n = std::stoi(env);
      } catch (const std::exception&) {
        n = 0;
      }
    }
  }
  g_threads = n > 0 ? n : 0;
#ifdef _OPENMP
  if (g_threads > 0) omp_set_num_threads(g_threads);
#endif
}

int configured_threads() { return g_threads; }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace wcde
