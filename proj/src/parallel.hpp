// Copyright 2026 The qmw Authors
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

#ifndef QMW_PARALLEL_HPP
#define QMW_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qmw::detail {

inline unsigned default_thread_count() {
  if (const char* env = std::getenv("QMW_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, total) into fixed-size chunks, evaluates them on a worker pool,
// and folds the per-chunk results in chunk order. The chunk size is a
// constant, never a function of the thread count, and each chunk is
// processed sequentially, so floating-point results are bit-identical no
// matter how many threads run.
template <typename Result, typename ChunkFn, typename MergeFn>
Result run_chunked(uint64_t total, uint64_t chunk_size, ChunkFn chunk_fn,
                   Result init, MergeFn merge, unsigned num_threads = 0) {
  if (total == 0) return init;
  if (num_threads == 0) num_threads = default_thread_count();
  const uint64_t num_chunks = (total + chunk_size - 1) / chunk_size;
  if (num_chunks == 1 || num_threads == 1) {
    Result acc = init;
    for (uint64_t c = 0; c < num_chunks; ++c) {
      uint64_t begin = c * chunk_size;
      uint64_t end = std::min(begin + chunk_size, total);
      acc = merge(std::move(acc), chunk_fn(begin, end));
    }
    return acc;
  }

  std::vector<Result> partial(num_chunks, init);
  std::atomic<uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= num_chunks) return;
      uint64_t begin = c * chunk_size;
      uint64_t end = std::min(begin + chunk_size, total);
      partial[c] = chunk_fn(begin, end);
    }
  };
  std::vector<std::thread> pool;
  unsigned launch = static_cast<unsigned>(
      std::min<uint64_t>(num_threads, num_chunks));
  pool.reserve(launch);
  for (unsigned t = 0; t < launch; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Result acc = init;
  for (uint64_t c = 0; c < num_chunks; ++c)
    acc = merge(std::move(acc), std::move(partial[c]));
  return acc;
}

}  // namespace qmw::detail

#endif  // QMW_PARALLEL_HPP
