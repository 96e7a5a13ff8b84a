// test_field_bracket.cpp

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heis/bracket.hpp"
#include "heis/checks.hpp"
#include "heis/gabor.hpp"
#include "test_oracles.hpp"

using namespace heis;
using heis_test::plancherel_double_loop;

namespace {

OperatorField seeded_field(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_field(rng);
}

}  // namespace

TEST_CASE("H_eps weighted norm matches the band integral") {
  // ||H_eps||^2 = int_eps^1 lambda^d dlambda = (1 - eps^{d+1})/(d+1);
  // d = 1, eps = 1/2 gives 3/8.
  const GaborConstruction c = GaborConstruction::create(
      WindowSpec::box(0.0, 1.0), 0.5, 1.0, 1.0, 1024, 1.0 / 1024.0, 0);
  const OperatorField field = band_field(c);
  CHECK(std::abs(field.weighted_norm_squared() - 0.375) <= 1e-3);
  CHECK(std::abs(plancherel_inner(field, field).real() - 0.375) <= 1e-3);

  // per-entry HS norm 1 up to the box quadrature error
  for (const auto& [key, op] : field.entries())
    CHECK(std::abs(op.hs_norm() - 1.0) <= 5e-3);
}

TEST_CASE("zero field") {
  OperatorField zero(FrequencyGrid(64, 0, 0, 1), make_grid_1d(0.0, 2.0, 0.25));
  CHECK(plancherel_inner(zero, zero) == cplx(0.0, 0.0));
  CHECK(zero.weighted_norm() == 0.0);
  const OperatorField f = seeded_field(1);
  for (int i = 0; i < 64; i += 9) {
    OperatorField zero_match(f.fgrid(), f.grid());
    CHECK(bracket_at(zero_match, f, i) == cplx(0.0, 0.0));
  }
}

TEST_CASE("plancherel_inner equals the alpha sum of brackets and the double loop") {
  const OperatorField f = seeded_field(2);
  const OperatorField g = seeded_field(3);
  const cplx fast = plancherel_inner(f, g);

  cplx via_bracket(0.0, 0.0);
  for (int i = 0; i < f.fgrid().alpha_res; ++i) via_bracket += bracket_at(f, g, i);
  via_bracket /= f.fgrid().alpha_res;
  CHECK(std::abs(fast - via_bracket) <= 1e-12 * (1.0 + std::abs(fast)));

  CHECK(std::abs(fast - plancherel_double_loop(f, g)) <= 1e-12 * (1.0 + std::abs(fast)));

  // conjugate symmetry and positivity
  CHECK(std::abs(plancherel_inner(g, f) - std::conj(fast)) <= 1e-13);
  CHECK(plancherel_inner(f, f).real() > 0.0);
  CHECK(std::abs(plancherel_inner(f, f).imag()) <= 1e-12);
}

TEST_CASE("grid mismatch is rejected") {
  const OperatorField f = seeded_field(4);
  OperatorField other_m(FrequencyGrid(32, -1, 1, 1), f.grid());
  CHECK_THROWS_AS(plancherel_inner(f, other_m), grid_error);
  OperatorField other_grid(f.fgrid(), make_grid_1d(-8.0, 8.0, 0.25));
  CHECK_THROWS_AS(plancherel_inner(f, other_grid), grid_error);
}

TEST_CASE("left_translate identity, central phases, norm, homomorphism") {
  const OperatorField f = seeded_field(5);

  const OperatorField same = left_translate(f, GroupElement::identity(1));
  CHECK(std::abs(plancherel_inner(same, f).real() -
                 plancherel_inner(f, f).real()) <= 1e-12);

  // central translate scales the entry at lambda by e^{2 pi i k lambda}
  GroupElement central = GroupElement::identity(1);
  central.t = 2.0;
  const OperatorField shifted = left_translate(f, central);
  for (const auto& [key, op] : f.entries()) {
    const double lam = f.fgrid().lambda(key.first, key.second);
    const HSOperator* moved = shifted.entry(key.first, key.second);
    REQUIRE(moved != nullptr);
    const cplx phase = std::polar(1.0, kTwoPi * 2.0 * lam);
    const cplx dev = hs_inner(*moved, op) - phase * hs_inner(op, op);
    CHECK(std::abs(dev) <= 1e-12 * (1.0 + op.hs_norm() * op.hs_norm()));
  }

  // norm preservation
  const GroupElement x = GroupElement::scalar(0.5, 0.7, 0.3);
  const OperatorField moved = left_translate(f, x);
  CHECK(std::abs(moved.weighted_norm() - f.weighted_norm()) <= 1e-10);

  // homomorphism on fields
  const GroupElement y = GroupElement::scalar(-0.25, 0.1, -0.6);
  const OperatorField two = left_translate(left_translate(f, y), x);
  const OperatorField one = left_translate(f, compose(x, y));
  const BracketProfile p2 = bracket_profile(two, two);
  const BracketProfile p1 = bracket_profile(one, one);
  double worst = 0.0;
  for (int i = 0; i < f.fgrid().alpha_res; ++i)
    worst = std::max(worst, std::abs(p2.values[i] - p1.values[i]));
  CHECK(worst <= 1e-10);
  CHECK(std::abs(plancherel_inner(two, one).real() -
                 plancherel_inner(one, one).real()) <= 1e-10);

  CHECK_THROWS_AS(left_translate(f, GroupElement::scalar(0.0101, 0, 0)), grid_error);
}

TEST_CASE("left_translate rejects support leaks") {
  // window against the domain edge: translating by +4 pushes it out
  const SpatialGridPtr grid = make_grid_1d(-8.0, 8.0, 0.125);
  std::mt19937_64 rng(6);
  WindowVector w = heis_test::random_window(grid, rng, 5.0, 7.0);
  OperatorField f(FrequencyGrid(8, 0, 0, 1), grid);
  f.set_entry(0, 0, HSOperator::rank_one(w, w));
  CHECK_THROWS_AS(left_translate(f, GroupElement::scalar(4.0, 0, 0)), grid_error);
  CHECK_NOTHROW(left_translate(f, GroupElement::scalar(-4.0, 0, 0)));
}

TEST_CASE("bracket of the bandlimited projector field") {
  const GaborConstruction c = GaborConstruction::create(
      WindowSpec::box(0.0, 1.0), 0.25, 1.0, 1.0, 256, 1.0 / 64.0, 1);
  const OperatorField field = band_field(c);
  const BracketProfile prof = bracket_profile(field, field);

  double worst = 0.0;
  for (int i = 0; i < 256; ++i) {
    const double alpha = prof.alpha(i);
    if (alpha <= 0.25) {
      CHECK(prof.values[i] == cplx(0.0, 0.0));  // absent entries, exact zero
    } else {
      worst = std::max(worst, std::abs(prof.values[i] - alpha));
    }
  }
  CHECK(worst <= 2e-2);

  // spot value near alpha = 0.5 (grid-resolution limited)
  const int mid = 128;  // alpha = 0.502
  CHECK(std::abs(bracket_at(field, field, mid).real() - 0.5) <= 2e-2);
}

TEST_CASE("profile conjugate symmetry and L1 bound") {
  const OperatorField f = seeded_field(7);
  const OperatorField g = seeded_field(8);
  const BracketProfile fg = bracket_profile(f, g);
  const BracketProfile gf = bracket_profile(g, f);
  double l1 = 0.0;
  for (int i = 0; i < f.fgrid().alpha_res; ++i) {
    CHECK(std::abs(fg.values[i] - std::conj(gf.values[i])) <= 1e-13);
    l1 += std::abs(fg.values[i]);
  }
  l1 /= f.fgrid().alpha_res;
  CHECK(l1 <= f.weighted_norm() * g.weighted_norm() + 1e-9);

  // auto profile is real and nonnegative
  const BracketProfile ff = bracket_profile(f, f);
  for (int i = 0; i < f.fgrid().alpha_res; ++i) {
    CHECK(std::abs(ff.values[i].imag()) <= 1e-12);
    CHECK(ff.values[i].real() >= -1e-12);
  }
}

TEST_CASE("modulation law") {
  const OperatorField f = seeded_field(9);
  const OperatorField g = seeded_field(10);

  for (int i = 0; i < 64; i += 5) CHECK(modulation_residual(f, g, 0, i) <= 1e-14);

  // k = 1 at alpha = 1/4: multiplier e^{-i pi/2} = -i
  OperatorField quarter(FrequencyGrid(2, 0, 0, 1), f.grid());
  std::mt19937_64 rng(11);
  const WindowVector w = heis_test::random_window(f.grid(), rng, -2.0, 2.0);
  quarter.set_entry(0, 0, HSOperator::rank_one(w, w));  // alpha_0 = 1/4
  GroupElement one = GroupElement::identity(1);
  one.t = 1.0;
  const cplx lhs = bracket_at(quarter, left_translate(quarter, one), 0);
  const cplx base = bracket_at(quarter, quarter, 0);
  CHECK(std::abs(lhs - cplx(0.0, -1.0) * base) <= 1e-13);

  const SuiteResult suite = run_modulation_suite(10, 123);
  CHECK(suite.passed);
}

TEST_CASE("covariance law") {
  const OperatorField f = seeded_field(12);
  const OperatorField g = seeded_field(13);
  const GroupElement x = GroupElement::scalar(0.5, 0.25, 1.0);

  for (int i = 0; i < 64; i += 7) {
    // x = x' reduces to the plain bracket
    CHECK(covariance_residual(f, g, x, x, i) <= 1e-12);
    const double direct = std::abs(bracket_at(left_translate(f, x), g, i) -
                                   bracket_at(f, left_translate(g, inverse(x)), i));
    CHECK(direct <= 1e-12);
  }

  const SuiteResult suite = run_covariance_suite(10, 321);
  CHECK(suite.passed);
}

TEST_CASE("pointwise Cauchy-Schwarz and dual integrability suites") {
  CHECK(run_cauchy_schwarz_suite(25, 99).passed);
  CHECK(run_dual_integrability_suite(25, 100).passed);
}

TEST_CASE("pluggable Plancherel weight") {
  // rho == 1 turns the bracket into the unweighted HS pairing
  const SpatialGridPtr grid = make_grid_1d(-4.0, 4.0, 0.25);
  std::mt19937_64 rng(16);
  const WindowVector w = heis_test::random_window(grid, rng, -1.0, 1.0);

  FrequencyGrid flat(8, 0, 0, 1);
  flat.custom_weight = [](double) { return 1.0; };
  flat.weight_name = "flat";
  OperatorField f(flat, grid);
  f.set_entry(2, 0, HSOperator::rank_one(w, w));
  const HSOperator& op = *f.entry(2, 0);
  CHECK(std::abs(bracket_at(f, f, 2) - hs_inner(op, op)) <= 1e-14);

  // default weight scales the same entry by alpha^d
  OperatorField g(FrequencyGrid(8, 0, 0, 1), grid);
  g.set_entry(2, 0, HSOperator::rank_one(w, w));
  const double alpha = (2 + 0.5) / 8.0;
  CHECK(std::abs(bracket_at(g, g, 2) - alpha * hs_inner(op, op)) <= 1e-14);

  // differing weights are a grid mismatch
  CHECK_THROWS_AS(plancherel_inner(f, g), grid_error);
}

TEST_CASE("zero-band fields have an exact j-sum") {
  const GaborConstruction c = GaborConstruction::create(
      WindowSpec::box(0.0, 1.0), 0.5, 1.0, 1.0, 64, 1.0 / 64.0, 0);
  const OperatorField field = band_field(c);
  for (int i = 0; i < 64; ++i) {
    const HSOperator* op = field.entry(i, 0);
    const cplx expected =
        op ? hs_inner(*op, *op) * field.fgrid().rho(field.fgrid().alpha(i))
           : cplx(0.0, 0.0);
    CHECK(bracket_at(field, field, i) == expected);  // bitwise: single term
  }
}

TEST_CASE("dense entries survive translation via the fallback path") {
  const OperatorField psi = seeded_field(15);
  // densify every entry, then translate: result must match the rank-one path
  OperatorField dense(psi.fgrid(), psi.grid());
  for (const auto& [key, op] : psi.entries())
    dense.set_entry(key.first, key.second, HSOperator::dense(psi.grid(), op.densified()));

  const GroupElement x = GroupElement::scalar(0.625, -0.4, 0.2);
  const OperatorField moved_fast = left_translate(psi, x);
  const OperatorField moved_dense = left_translate(dense, x);
  CHECK(moved_fast.dense_fallbacks() == 0);
  CHECK(moved_dense.dense_fallbacks() == static_cast<int>(psi.entries().size()));
  CHECK(std::abs(moved_dense.weighted_norm() - psi.weighted_norm()) <= 1e-10);

  const BracketProfile pf = bracket_profile(moved_fast, moved_fast);
  const BracketProfile pd = bracket_profile(moved_dense, moved_dense);
  for (int i = 0; i < psi.fgrid().alpha_res; ++i)
    CHECK(std::abs(pf.values[i] - pd.values[i]) <= 1e-11);
}

TEST_CASE("combine_central_translates matches densified assembly") {
  const OperatorField psi = seeded_field(14);
  std::map<long long, cplx> coeffs{{-2, cplx(0.3, -0.1)}, {0, cplx(1.0, 0.0)},
                                   {3, cplx(-0.4, 0.2)}};
  const OperatorField fast = combine_central_translates(psi, coeffs);

  // oracle: sum the translated fields explicitly (densifying adds)
  OperatorField slow(psi.fgrid(), psi.grid());
  for (const auto& [k, ck] : coeffs) {
    GroupElement g2 = GroupElement::identity(1);
    g2.t = static_cast<double>(k);
    slow = field_add(slow, field_scale(left_translate(psi, g2), ck));
  }
  const cplx nf = plancherel_inner(fast, fast);
  const cplx ns = plancherel_inner(slow, slow);
  CHECK(std::abs(nf - ns) <= 1e-11 * (1.0 + std::abs(nf)));
  const cplx cross = plancherel_inner(fast, slow);
  CHECK(std::abs(cross - nf) <= 1e-11 * (1.0 + std::abs(nf)));
}
