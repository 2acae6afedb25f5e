#include "edgepoly/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace edgepoly {

namespace {

std::atomic<std::size_t> g_threads{0};
thread_local bool t_inside_worker = false;

}  // namespace

void set_thread_count(std::size_t n) { g_threads = n; }

std::size_t thread_count() {
  const std::size_t n = g_threads;
  if (n > 0) return n;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  // Nested loops run inline on the calling worker.
  const std::size_t workers = t_inside_worker ? 1 : std::min(thread_count(), n);
  if (workers == 1) {
    body(0, n);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers, end = n * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      t_inside_worker = true;
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  parallel_chunks(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) body(i);
  });
}

}  // namespace edgepoly
