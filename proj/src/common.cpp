#include "zonocube/common.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace zonocube {

uint64_t default_budget() {
  static const uint64_t value = [] {
    const char* env = std::getenv("ZONOCUBE_BUDGET");
    if (env == nullptr || *env == '\0') return uint64_t{50'000'000};
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw InvalidInput(std::string("ZONOCUBE_BUDGET is not a number: ") + env);
    return static_cast<uint64_t>(v);
  }();
  return value;
}

void parallel_for(int n_items, int threads, const std::function<void(int)>& fn) {
  if (n_items <= 0) return;
  if (threads <= 1 || n_items == 1) {
    for (int i = 0; i < n_items; ++i) fn(i);
    return;
  }
  int workers = std::min(threads, n_items);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n_items || failed.load(std::memory_order_relaxed)) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace zonocube
