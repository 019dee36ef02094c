#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace ocf {

// Deterministic fork-join reduction over item indices [0, count). Each item
// must derive its own randomness from its index, so the fold result is
// independent of how items are chunked; merge order is fixed (ascending
// chunk), making results byte-identical for every jobs value.
template <typename State, typename ItemFn>
State parallelReduce(std::uint64_t count, int jobs, ItemFn item) {
  if (jobs < 1) jobs = 1;
  std::uint64_t chunks = std::min<std::uint64_t>(jobs, count ? count : 1);
  if (chunks <= 1) {
    State s;
    for (std::uint64_t i = 0; i < count; ++i) item(s, i);
    return s;
  }
  std::vector<State> partial(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    std::uint64_t begin = count * c / chunks;
    std::uint64_t end = count * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      for (std::uint64_t i = begin; i < end; ++i) item(partial[c], i);
    });
  }
  for (auto& w : workers) w.join();
  State s;
  for (auto& p : partial) s.merge(std::move(p));
  return s;
}

}  // namespace ocf
