// checks.hpp
//
// Seeded randomized property suites for the bracket laws. Each suite draws
// rank-one fields with in-domain supports and reports the worst residual
// against its law's tolerance; they back both the `check` CLI subcommand and
// the acceptance gate.

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

#include <cstdint>
#include <random>
#include <string>

#include "heis/field.hpp"

namespace heis {

struct SuiteResult {
  std::string name;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Random rank-one field on the shared harness grid (M = 64, band [-1, 1],
// domain [-8, 8) at h = 1/8, supports inside [-2, 2) so lattice translates
// with |n| <= 2 stay in-domain). Entry occupancy ~ 0.6.
OperatorField random_field(std::mt19937_64& rng);

// |[F, L_{(0,0,k)} G] - e^{-2 pi i k alpha} [F, G]| <= 1e-12 (1 + |[F,G]|),
// k in {-3..3}, every midpoint.
SuiteResult run_modulation_suite(int trials, std::uint64_t seed);

// |[L_x F, L_{x'} G] - [F, L_{x^{-1} x'} G]| <= 1e-10 over random lattice
// pairs, every midpoint.
SuiteResult run_covariance_suite(int trials, std::uint64_t seed);

// |[F,G]|^2 <= [F,F][G,G] + 1e-12 (1 + [F,F][G,G]) at every midpoint.
SuiteResult run_cauchy_schwarz_suite(int trials, std::uint64_t seed);

// |<F, L_{(0,0,k)} G> - (1/M) sum_i [F,G](alpha_i) e^{-2 pi i k alpha_i}|
// <= 1e-10, |k| <= M/4.
SuiteResult run_dual_integrability_suite(int trials, std::uint64_t seed);

// Isometry of S_psi on random central coefficient vectors against the
// bandlimited generator (eps = 0.25): residual <= 1e-8 ||phi||^2.
SuiteResult run_isometry_suite(int trials, std::uint64_t seed);

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed);

}  // namespace heis
