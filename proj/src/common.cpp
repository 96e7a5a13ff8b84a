// common.cpp

// Copyright 2026  The heisbracket authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "heis/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace heis {

const char* version() { return "0.1.0"; }

int max_threads() {
  static const int cached = [] {
    if (const char* env = std::getenv("HEISBRACKET_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1) return static_cast<int>(std::min<long>(v, 64));
      return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
  }();
  return cached;
}

void parallel_for(long n, const std::function<void(long)>& fn) {
  const int workers = max_threads();
  if (workers <= 1 || n < 64) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  const long chunk = (n + workers - 1) / workers;
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const long begin = w * chunk;
    const long end = std::min(n, begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, [begin, end, &fn] {
      for (long i = begin; i < end; ++i) fn(i);
    }));
  }
  for (auto& f : futures) f.get();
}

}  // namespace heis
