#include "ecsldg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ecsldg {

namespace {
std::atomic<int> g_threads{1};
}

int num_threads() { return g_threads.load(); }

void set_num_threads(int n) { g_threads.store(std::max(1, n)); }

void parallel_for(int n, const std::function<void(int, int)>& body) {
  const int workers = std::min(num_threads(), n);
  if (workers <= 1) {
    if (n > 0) body(0, n);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    const int chunk = (n + workers - 1) / workers;
    for (int w = 1; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        try {
          body(begin, end);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    try {
      body(0, std::min(n, chunk));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace ecsldg
