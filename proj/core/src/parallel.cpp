#include "shortcut/parallel.hpp"

#include <cstdlib>
#include <string>

namespace shortcut {

unsigned default_thread_count() {
  const char* env = std::getenv("SHORTCUT_LAB_THREADS");
  if (env == nullptr) return 1;
  try {
    const unsigned long value = std::stoul(env);
    return value == 0 ? 1U : static_cast<unsigned>(std::min<unsigned long>(value, 256));
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace shortcut
