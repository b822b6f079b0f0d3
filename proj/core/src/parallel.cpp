#include "zmc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace zmc {

unsigned worker_count() {
  if (const char* env = std::getenv("ZMC_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1u;
}

}  // namespace zmc
