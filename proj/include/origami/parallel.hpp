#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace origami {

/// Worker threads used by the series builders and oracles; 0 = hardware.
void set_worker_threads(unsigned threads);
unsigned worker_threads();

/// Calls body(i, worker) for i in [0, count) on up to worker_threads()
/// threads, handing out indices dynamically. The first exception is rethrown
/// after all workers stop.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(worker_threads(), std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](unsigned w) {
    for (std::size_t i = next++; i < count && !stop; i = next++) {
      try {
        body(i, w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) {
    pool.emplace_back(run, w);
  }
  run(0);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace origami
