#include "dunkl/threads.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace dunkl {

int configure_threads_from_env() {
  if (const char* v = std::getenv(kThreadsEnv)) {
    try {
      const int n = std::stoi(v);
      if (n > 0) omp_set_num_threads(n);
    } catch (const std::exception&) {
      // ignored: malformed values leave the OpenMP default in place
    }
  }
  return omp_get_max_threads();
}

}  // namespace dunkl
