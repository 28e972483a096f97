#pragma once

#include <exception>
#include <thread>
#include <vector>

namespace trieig {

// Runs f(i) for i in [begin, end) on a small worker pool.  Iterations must be
// independent; results are written to per-index slots by the caller, so the
// output order is deterministic.  The first exception wins and is rethrown.
template <typename F>
void parallel_for(int begin, int end, F&& f, int threads = 0) {
  const int total = end - begin;
  if (total <= 0) return;
  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > total) workers = total;
  if (workers == 1) {
    for (int i = begin; i < end; ++i) f(i);
    return;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = begin + w; i < end; i += workers) f(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace trieig
