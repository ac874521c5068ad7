#include "cubocubic/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cubocubic {

Parallelism Parallelism::from_env() {
  if (const char* env = std::getenv("CUBOCUBIC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return {static_cast<unsigned>(v)};
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return {std::max(1U, std::thread::hardware_concurrency())};
}

}  // namespace cubocubic
