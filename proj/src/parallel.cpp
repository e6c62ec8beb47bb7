#include "symcalc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace symcalc {

namespace {
std::atomic<unsigned> override_threads{0};
}

unsigned parallelism() {
  if (unsigned t = override_threads.load()) return t;
  if (const char* env = std::getenv("SYMCALC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
      // ignore malformed values
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void set_parallelism(unsigned threads) { override_threads = threads; }

}  // namespace symcalc
