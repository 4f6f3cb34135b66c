// Copyright 2026 The arrowkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARROWKIT_PARALLEL_HPP_
#define ARROWKIT_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace arrowkit {

namespace internal {

inline std::atomic<int>& worker_override() {
  static std::atomic<int> value{0};
  return value;
}

}  // namespace internal

// --threads wins over ARROW_THREADS, which wins over the hardware count.
inline void set_worker_count(int n) { internal::worker_override() = n; }

inline int worker_count() {
  if (const int n = internal::worker_override(); n > 0) return n;
  if (const char* env = std::getenv("ARROW_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(i) for i in [0, n). Work is claimed dynamically; callers write
// results into slot i so output order never depends on scheduling. The
// first exception thrown by any task is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t n, Body&& body, int workers = worker_count()) {
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::jthread> pool;
  const std::size_t spawn = std::min<std::size_t>(workers, n) - 1;
  for (std::size_t w = 0; w < spawn; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace arrowkit

#endif  // ARROWKIT_PARALLEL_HPP_
