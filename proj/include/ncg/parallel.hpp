#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ncg {

// Process-wide worker count used by parallel_for; 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Calls fn(i) for every i in [begin, end).  Work is handed out in chunks from
// a shared counter, so callers must write results into per-index slots and
// merge afterwards to stay deterministic.  The first exception thrown by any
// worker is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, Fn&& fn, std::size_t chunk = 1) {
  if (end <= begin) return;
  const std::size_t total = end - begin;
  unsigned workers = thread_count();
  if (workers <= 1 || total <= chunk) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  if (chunk == 0) chunk = 1;
  std::atomic<std::size_t> next{begin};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t start = next.fetch_add(chunk);
      if (start >= end) break;
      std::size_t stop = start + chunk < end ? start + chunk : end;
      try {
        for (std::size_t i = start; i < stop; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ncg
