// common.hpp

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

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace heis {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Raised when an input description is malformed (bad JSON, bad window kind,
// inconsistent dimensions, values out of range). CLI exit code 3.
class spec_error : public std::runtime_error {
 public:
  explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when grids are incompatible with the requested operation: mismatched
// spatial/frequency grids, off-grid translations, support leaking past the
// domain under the zero-padding policy. CLI exit code 4.
class grid_error : public std::runtime_error {
 public:
  explicit grid_error(const std::string& what) : std::runtime_error(what) {}
};

const char* version();

// Worker cap for parallel loops; reads HEISBRACKET_THREADS once (0 or 1
// disables threading). Results are slot-indexed so the thread count never
// changes any output bit.
int max_threads();

// Runs fn(i) for i in [0, n). Chunked over max_threads() workers when n is
// large enough to bother; fn must only write to state owned by index i.
void parallel_for(long n, const std::function<void(long)>& fn);

}  // namespace heis
