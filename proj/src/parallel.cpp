#include "pairwords/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pairwords {

unsigned resolve_workers(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PAIRWORDS_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1 && static_cast<unsigned long>(cap) < n) n = static_cast<unsigned>(cap);
    } catch (...) {
    }
  }
  return n;
}

}  // namespace pairwords
