#include "qtensor/util/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qtensor::util {

unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("QTENSOR_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) return hw;
  return static_cast<unsigned>(v);
}

}  // namespace qtensor::util
