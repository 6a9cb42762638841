// Copyright 2026 The pntomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PNT_PARALLEL_HPP
#define PNT_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace pnt {

struct ParallelOptions {
  bool ordered = true;   // ordered reduction: result is bitwise independent of worker count
  unsigned workers = 0;  // 0 = hardware concurrency
};

namespace detail {
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}
}  // namespace detail

/// Deterministic map-reduce over [0, count): indices are processed in fixed
/// chunks of 64; chunk partials are combined in chunk order when
/// `ordered` is set, so the result does not depend on the worker count.
/// With `ordered == false` each worker folds its chunks locally and the
/// worker partials are combined last (may differ from the ordered result at
/// the level of floating-point reassociation only).
template <typename T, typename MakeZero, typename AccumulateIndex, typename Combine>
T chunked_sum(std::size_t count, MakeZero make_zero, AccumulateIndex accumulate,
              Combine combine, const ParallelOptions& opt = {}) {
  constexpr std::size_t kChunk = 64;
  const std::size_t n_chunks = (count + kChunk - 1) / kChunk;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(detail::resolve_workers(opt.workers), n_chunks ? n_chunks : 1));

  auto run_chunk = [&](std::size_t c, T& acc) {
    const std::size_t lo = c * kChunk;
    const std::size_t hi = std::min(lo + kChunk, count);
    for (std::size_t i = lo; i < hi; ++i) accumulate(i, acc);
  };

  if (workers <= 1) {
    T total = make_zero();
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c, total);
    return total;
  }

  if (opt.ordered) {
    std::vector<T> partials(n_chunks, make_zero());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
          run_chunk(c, partials[c]);
      });
    }
    for (auto& th : pool) th.join();
    T total = make_zero();
    for (std::size_t c = 0; c < n_chunks; ++c) combine(total, partials[c]);
    return total;
  }

  std::vector<T> worker_partials(workers, make_zero());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
        run_chunk(c, worker_partials[t]);
    });
  }
  for (auto& th : pool) th.join();
  T total = make_zero();
  for (unsigned t = 0; t < workers; ++t) combine(total, worker_partials[t]);
  return total;
}

/// Parallel map over [0, count) with independent outputs; `fn(i)` must only
/// write state owned by index i.
template <typename Fn>
void parallel_for(std::size_t count, Fn fn, const ParallelOptions& opt = {}) {
  const unsigned workers = detail::resolve_workers(opt.workers);
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace pnt

#endif  // PNT_PARALLEL_HPP
