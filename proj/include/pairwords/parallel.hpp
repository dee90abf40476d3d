#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace pairwords {

// Worker count: the request if nonzero, else hardware concurrency; always capped
// by the PAIRWORDS_THREADS environment variable when set.
unsigned resolve_workers(unsigned requested);

// Calls body(k) for k in [0, count) on up to `workers` threads. Indices are
// handed out dynamically; callers write results into per-index slots so the
// outcome does not depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body body) {
  workers = resolve_workers(workers);
  if (workers <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) body(k);
  };
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

}  // namespace pairwords
