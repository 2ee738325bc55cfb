#include "origami/parallel.hpp"

namespace origami {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_worker_threads(unsigned threads) { g_threads = threads; }

unsigned worker_threads() {
  unsigned t = g_threads.load();
  return t != 0 ? t : std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace origami
