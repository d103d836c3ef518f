// Copyright 2026 The shmc Authors
//
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace shmc {

inline unsigned default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Runs fn(begin, end) over a static partition of [0, count) into at most
// `workers` contiguous chunks. The partition depends only on count and the
// chunk count, never on scheduling, so any work done per element is
// reproducible across worker counts as long as fn is a pure function of its
// range. The first exception (in chunk order) is rethrown on the caller.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  std::size_t chunks = std::min<std::size_t>(workers, count);
  if (chunks <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  std::size_t base = count / chunks;
  std::size_t extra = count % chunks;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < chunks; ++i) {
    std::size_t len = base + (i < extra ? 1 : 0);
    threads.emplace_back([&, i, begin, len] {
      try {
        fn(begin, begin + len);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
    begin += len;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace shmc
