#include "ko7/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ko7 {

std::size_t worker_count() {
  if (const char* env = std::getenv("KO7_WORKERS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace ko7
