// checks.cpp

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

#include "heis/checks.hpp"

#include <cmath>

#include "heis/analysis.hpp"
#include "heis/bracket.hpp"
#include "heis/gabor.hpp"

namespace heis {

namespace {

constexpr int kHarnessM = 64;

SpatialGridPtr harness_grid() {
  static const SpatialGridPtr grid = make_grid_1d(-8.0, 8.0, 0.125);
  return grid;
}

LatticeSpecPtr harness_lattice() {
  static const LatticeSpecPtr spec = std::make_shared<const LatticeSpec>(
      Eigen::MatrixXd::Identity(1, 1), Eigen::MatrixXd::Identity(1, 1));
  return spec;
}

WindowVector random_window(std::mt19937_64& rng) {
  const SpatialGridPtr grid = harness_grid();
  std::normal_distribution<double> gauss(0.0, 1.0);
  WindowVector w;
  w.grid = grid;
  w.values.setZero(grid->total());
  // support inside [-2, 2) so translates within the harness radius never leak
  for (long k = 0; k < grid->total(); ++k) {
    const double x = grid->node(k)[0];
    if (x >= -2.0 && x < 2.0) w.values[k] = cplx(gauss(rng), gauss(rng));
  }
  const double nrm = w.norm();
  if (nrm > 0.0) w.values /= nrm;
  return w;
}

}  // namespace

OperatorField random_field(std::mt19937_64& rng) {
  FrequencyGrid fgrid(kHarnessM, -1, 1, 1);
  OperatorField field(fgrid, harness_grid());
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < kHarnessM; ++i) {
    for (int j = fgrid.band_lo; j <= fgrid.band_hi; ++j) {
      if (unif(rng) > 0.6) continue;
      WindowVector left = random_window(rng);
      WindowVector right = random_window(rng);
      field.set_entry(i, j, HSOperator::rank_one(std::move(left), std::move(right)));
    }
  }
  return field;
}

SuiteResult run_modulation_suite(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult res{"modulation", trials, 0.0, 0.0, false};
  for (int t = 0; t < trials; ++t) {
    const OperatorField f = random_field(rng);
    const OperatorField g = random_field(rng);
    const BracketProfile base = bracket_profile(f, g);
    for (long long k = -3; k <= 3; ++k) {
      GroupElement gamma2 = GroupElement::identity(1);
      gamma2.t = static_cast<double>(k);
      const BracketProfile shifted = bracket_profile(f, left_translate(g, gamma2));
      for (int i = 0; i < kHarnessM; ++i) {
        const cplx expected =
            std::polar(1.0, -kTwoPi * static_cast<double>(k) * base.alpha(i)) *
            base.values[i];
        const double scale = 1.0 + std::abs(base.values[i]);
        res.max_residual = std::max(res.max_residual,
                                    std::abs(shifted.values[i] - expected) / scale);
      }
    }
  }
  res.tolerance = 1e-12;
  res.passed = res.max_residual <= res.tolerance;
  return res;
}

SuiteResult run_covariance_suite(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-2, 2);
  SuiteResult res{"covariance", trials, 0.0, 0.0, false};
  const LatticeSpecPtr lattice = harness_lattice();
  for (int t = 0; t < trials; ++t) {
    const OperatorField f = random_field(rng);
    const OperatorField g = random_field(rng);
    LatticePoint x = LatticePoint::zero(lattice), xp = LatticePoint::zero(lattice);
    x.n[0] = coord(rng);
    x.m[0] = coord(rng);
    x.k = coord(rng);
    xp.n[0] = coord(rng);
    xp.m[0] = coord(rng);
    xp.k = coord(rng);
    const BracketProfile lhs =
        bracket_profile(left_translate(f, embed(x)), left_translate(g, embed(xp)));
    const BracketProfile rhs = bracket_profile(
        f, left_translate(g, compose(inverse(embed(x)), embed(xp))));
    for (int i = 0; i < kHarnessM; ++i)
      res.max_residual =
          std::max(res.max_residual, std::abs(lhs.values[i] - rhs.values[i]));
  }
  res.tolerance = 1e-10;
  res.passed = res.max_residual <= res.tolerance;
  return res;
}

SuiteResult run_cauchy_schwarz_suite(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult res{"cauchy-schwarz", trials, 0.0, 0.0, false};
  for (int t = 0; t < trials; ++t) {
    const OperatorField f = random_field(rng);
    const OperatorField g = random_field(rng);
    const BracketProfile fg = bracket_profile(f, g);
    const BracketProfile ff = bracket_profile(f, f);
    const BracketProfile gg = bracket_profile(g, g);
    for (int i = 0; i < kHarnessM; ++i) {
      const double lhs = std::norm(fg.values[i]);
      const double rhs = ff.values[i].real() * gg.values[i].real();
      const double violation = (lhs - rhs) / (1.0 + rhs);
      res.max_residual = std::max(res.max_residual, violation);
    }
  }
  res.tolerance = 1e-12;
  res.passed = res.max_residual <= res.tolerance;
  return res;
}

SuiteResult run_dual_integrability_suite(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> shift(-kHarnessM / 4, kHarnessM / 4);
  SuiteResult res{"dual-integrability", trials, 0.0, 0.0, false};
  for (int t = 0; t < trials; ++t) {
    const OperatorField f = random_field(rng);
    const OperatorField g = random_field(rng);
    const long long k = shift(rng);
    GroupElement gamma2 = GroupElement::identity(1);
    gamma2.t = static_cast<double>(k);
    const cplx direct = plancherel_inner(f, left_translate(g, gamma2));
    const BracketProfile prof = bracket_profile(f, g);
    cplx via_bracket(0.0, 0.0);
    for (int i = 0; i < kHarnessM; ++i)
      via_bracket += prof.values[i] *
                     std::polar(1.0, -kTwoPi * static_cast<double>(k) * prof.alpha(i));
    via_bracket /= kHarnessM;
    res.max_residual = std::max(res.max_residual, std::abs(direct - via_bracket));
  }
  res.tolerance = 1e-10;
  res.passed = res.max_residual <= res.tolerance;
  return res;
}

SuiteResult run_isometry_suite(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<long long> shift(-kHarnessM / 4, kHarnessM / 4);
  SuiteResult res{"isometry", trials, 0.0, 0.0, false};

  const GaborConstruction c = GaborConstruction::create(
      WindowSpec::box(0.0, 1.0), 0.25, 1.0, 1.0, kHarnessM, 1.0 / 64.0, 1);
  const OperatorField psi = band_field(c);
  const double tau = default_tau(bracket_profile(psi, psi));

  for (int t = 0; t < trials; ++t) {
    std::map<long long, cplx> coeffs;
    for (int j = 0; j < 5; ++j) coeffs[shift(rng)] += cplx(gauss(rng), gauss(rng));
    const OperatorField phi = combine_central_translates(psi, coeffs);
    const double phi_norm2 = plancherel_inner(phi, phi).real();
    if (phi_norm2 == 0.0) continue;
    res.max_residual = std::max(
        res.max_residual, isometry_residual(psi, coeffs, tau) / phi_norm2);
  }
  res.tolerance = 1e-8;
  res.passed = res.max_residual <= res.tolerance;
  return res;
}

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed) {
  if (name == "modulation") return run_modulation_suite(trials, seed);
  if (name == "covariance") return run_covariance_suite(trials, seed);
  if (name == "cauchy-schwarz") return run_cauchy_schwarz_suite(trials, seed);
  if (name == "dual-integrability") return run_dual_integrability_suite(trials, seed);
  if (name == "isometry") return run_isometry_suite(trials, seed);
  throw spec_error("unknown property suite: " + name);
}

}  // namespace heis
