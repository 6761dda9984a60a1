#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "lcklab/kernels.hpp"

namespace lcklab {

namespace {
std::atomic<int> g_thread_limit{0};
}

void set_thread_limit(int threads) { g_thread_limit.store(threads > 0 ? threads : 0); }

int thread_limit() { return g_thread_limit.load(); }

void configure_threads_from_env() {
  const char* raw = std::getenv("LCK_LAB_THREADS");
  if (raw == nullptr) return;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec == std::errc() && ptr == end && value > 0) set_thread_limit(value);
}

}  // namespace lcklab
