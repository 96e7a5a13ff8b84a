// test_analysis.cpp

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

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>

#include "heis/analysis.hpp"
#include "heis/gabor.hpp"
#include "test_oracles.hpp"

using namespace heis;

namespace {

// eps = 0.25 box construction; margin 2 covers gram difference translates.
const GaborConstruction& box_construction() {
  static const GaborConstruction c = GaborConstruction::create(
      WindowSpec::box(0.0, 1.0), 0.25, 1.0, 1.0, 256, 1.0 / 64.0, 2);
  return c;
}

const OperatorField& box_field() {
  static const OperatorField f = band_field(box_construction());
  return f;
}

const FixtureResult& fixture() {
  static const FixtureResult f = orthonormal_fixture(16, 1.0 / 32.0, 2, 16, 2);
  return f;
}

OperatorField zero_field() {
  return OperatorField(FrequencyGrid(64, 0, 0, 1), make_grid_1d(-2.0, 2.0, 0.25));
}

}  // namespace

TEST_CASE("spectral support masks") {
  const OperatorField& psi = box_field();
  const BracketProfile autop = bracket_profile(psi, psi);
  const SpectralSupport support = spectral_support(psi, default_tau(autop));
  for (int i = 0; i < 256; ++i)
    CHECK(support.mask[i] == (autop.alpha(i) > 0.25));

  const OperatorField zero = zero_field();
  const SpectralSupport empty = spectral_support(zero, default_tau(bracket_profile(zero, zero)));
  CHECK(empty.none());

  const SpectralSupport full =
      spectral_support(fixture().field, 1e-9);
  CHECK(full.all());

  CHECK_THROWS_AS(spectral_support(psi, -1.0), spec_error);
}

TEST_CASE("s_map ratio, phase law, finite combinations") {
  const FixtureResult& fix = fixture();
  const OperatorField& psi = fix.field;
  const double tau = 1e-9;
  const int m_res = psi.fgrid().alpha_res;

  // s_map(psi, psi) is the support indicator
  const Eigen::VectorXcd diag = s_map(psi, psi, tau);
  for (int i = 0; i < m_res; ++i) CHECK(std::abs(diag[i] - 1.0) <= 1e-12);

  // s_map(L_{(0,0,k)} psi, psi) = e^{2 pi i k alpha}
  GroupElement g2 = GroupElement::identity(1);
  g2.t = 2.0;
  const Eigen::VectorXcd phases = s_map(left_translate(psi, g2), psi, tau);
  for (int i = 0; i < m_res; ++i) {
    const cplx expected = std::polar(1.0, kTwoPi * 2.0 * (i + 0.5) / m_res);
    CHECK(std::abs(phases[i] - expected) <= 1e-12);
  }

  // finite combination: s_map = sum_k a_k e^{2 pi i k alpha} on the mask
  std::map<long long, cplx> coeffs{{-1, cplx(0.5, 0.5)}, {0, cplx(1.0, 0.0)},
                                   {2, cplx(0.0, -0.8)}};
  const Eigen::VectorXcd combo = s_map(combine_central_translates(psi, coeffs), psi, tau);
  for (int i = 0; i < m_res; ++i) {
    cplx expected(0.0, 0.0);
    const double alpha = (i + 0.5) / m_res;
    for (const auto& [k, c] : coeffs)
      expected += c * std::polar(1.0, kTwoPi * static_cast<double>(k) * alpha);
    CHECK(std::abs(combo[i] - expected) <= 1e-11);
  }
}

TEST_CASE("isometry residual") {
  const OperatorField& psi = box_field();
  const double tau = default_tau(bracket_profile(psi, psi));

  // phi = psi
  CHECK(isometry_residual(psi, {{0, cplx(1.0, 0.0)}}, tau) <=
        1e-8 * plancherel_inner(psi, psi).real());
  // phi = L_{(0,0,1)} psi
  CHECK(isometry_residual(psi, {{1, cplx(1.0, 0.0)}}, tau) <=
        1e-8 * plancherel_inner(psi, psi).real());

  std::mt19937_64 rng(2024);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<long long> pick(-64, 64);  // M/4 = 64
  for (int trial = 0; trial < 20; ++trial) {
    std::map<long long, cplx> coeffs;
    for (int j = 0; j < 6; ++j) coeffs[pick(rng)] += cplx(gauss(rng), gauss(rng));
    const OperatorField phi = combine_central_translates(psi, coeffs);
    const double phi_norm2 = plancherel_inner(phi, phi).real();
    CHECK(isometry_residual(psi, coeffs, tau) <= 1e-8 * phi_norm2);
  }

  CHECK_THROWS_AS(isometry_residual(psi, {{100, cplx(1.0, 0.0)}}, tau), spec_error);
}

TEST_CASE("check_condition") {
  const FixtureResult& fix = fixture();
  // radius 0 is vacuous
  CHECK(check_condition(fix.field, fix.lattice, 0, 1e-9).residual == 0.0);
  // fixture cross brackets are exact grid zeros
  const ConditionCheck cond = check_condition(fix.field, fix.lattice, 1, 1e-9);
  CHECK(cond.residual <= 1e-12);

  // box window: translations vanish only once a >= 1/eps; with a = 1 the
  // overlaps are genuine, so the residual is large
  const ConditionCheck box_cond =
      check_condition(box_field(), box_construction().lattice, 1, 1e-9);
  CHECK(box_cond.residual > 1e-3);
  REQUIRE(box_cond.worst.has_value());
  CHECK(std::abs(box_cond.worst->value) == doctest::Approx(box_cond.residual));

  // monotonicity in the ball radius
  const ConditionCheck wider =
      check_condition(box_field(), box_construction().lattice, 2, 1e-9);
  CHECK(wider.residual >= box_cond.residual);
}

TEST_CASE("check_onb") {
  const FixtureResult& fix = fixture();
  const CertReport good = check_onb(fix.field, fix.lattice, 1, 3, 1e-9, 1e-8);
  CHECK(good.verdict == Verdict::kCertified);
  CHECK(good.a_est == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(good.b_est == doctest::Approx(1.0).epsilon(1e-10));
  REQUIRE(good.central_residual.has_value());
  CHECK(*good.central_residual <= 1e-12);

  // psi_eps: [psi,psi] = alpha != 1
  const CertReport bad =
      check_onb(box_field(), box_construction().lattice, 1, 3,
                default_tau(bracket_profile(box_field(), box_field())), 1e-8);
  CHECK(bad.verdict == Verdict::kRefuted);

  const OperatorField zero = zero_field();
  const auto id_lattice = std::make_shared<const LatticeSpec>(
      Eigen::MatrixXd::Identity(1, 1), Eigen::MatrixXd::Identity(1, 1));
  CHECK(check_onb(zero, id_lattice, 1, 2, 1e-9, 1e-8).verdict == Verdict::kRefuted);
}

TEST_CASE("riesz_certify") {
  const FixtureResult& fix = fixture();
  const CertReport good = riesz_certify(fix.field, fix.lattice, 1, 1e-9, 1e-8);
  CHECK(good.verdict == Verdict::kCertified);
  CHECK(good.a_est == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(good.b_est == doctest::Approx(1.0).epsilon(1e-10));

  // psi_eps vanishes on (0, eps]: refuted over the full interval, but only
  // with a lattice that satisfies the condition hypothesis; a = 4 separates
  // the box supports, and tolerance 2e-2 absorbs the O(h) modulation terms.
  const GaborConstruction sep = GaborConstruction::create(
      WindowSpec::box(0.0, 1.0), 0.25, 4.0, 1.0, 256, 1.0 / 64.0, 1);
  const OperatorField psi = band_field(sep);
  const double tau = default_tau(bracket_profile(psi, psi));
  const CertReport refuted = riesz_certify(psi, sep.lattice, 1, tau, 2e-2);
  CHECK(refuted.verdict == Verdict::kRefuted);
  CHECK(refuted.a_est <= 1e-12);

  // hypothesis violation surfaces as INCONCLUSIVE with the residual attached
  const CertReport blocked =
      riesz_certify(box_field(), box_construction().lattice, 1, 1e-9, 1e-8);
  CHECK(blocked.verdict == Verdict::kInconclusive);
  CHECK(blocked.condition_residual > 1e-8);
  CHECK(blocked.violation.has_value());

  const OperatorField zero = zero_field();
  const auto id_lattice = std::make_shared<const LatticeSpec>(
      Eigen::MatrixXd::Identity(1, 1), Eigen::MatrixXd::Identity(1, 1));
  CHECK(riesz_certify(zero, id_lattice, 1, 1e-9, 1e-8).verdict == Verdict::kRefuted);
}

TEST_CASE("frame_certify") {
  const FixtureResult& fix = fixture();
  const CertReport fixture_frame = frame_certify(fix.field, fix.lattice, 1, 1e-9, 1e-8);
  CHECK(fixture_frame.verdict == Verdict::kCertified);
  CHECK(fixture_frame.a_est == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fixture_frame.b_est == doctest::Approx(1.0).epsilon(1e-10));

  // separated box psi_eps at the loose grid tolerance: frame with
  // (A, B) ~ (eps, 1); Riesz fails on the same input (previous case)
  const GaborConstruction sep = GaborConstruction::create(
      WindowSpec::box(0.0, 1.0), 0.25, 4.0, 1.0, 256, 1.0 / 64.0, 1);
  const OperatorField psi = band_field(sep);
  const double tau = default_tau(bracket_profile(psi, psi));
  const CertReport frame = frame_certify(psi, sep.lattice, 1, tau, 2e-2);
  CHECK(frame.verdict == Verdict::kCertified);
  CHECK(std::abs(frame.a_est - 0.25) <= 2e-2);
  CHECK(std::abs(frame.b_est - 1.0) <= 2e-2);

  const OperatorField zero = zero_field();
  const auto id_lattice = std::make_shared<const LatticeSpec>(
      Eigen::MatrixXd::Identity(1, 1), Eigen::MatrixXd::Identity(1, 1));
  CHECK(frame_certify(zero, id_lattice, 1, 1e-9, 1e-8).verdict == Verdict::kRefuted);
}

TEST_CASE("gram oracle paths agree and block structure holds") {
  const OperatorField& psi = box_field();
  const GramPair gram = gram_oracle(psi, box_construction().lattice, 1, 3);
  REQUIRE(gram.ball.size() == 9 * 7);

  CHECK(gram.max_deviation <= 1e-8 * std::max(1.0, gram.max_abs_entry));
  CHECK(gram.hermitian);

  // diagonal entries are ||psi||^2
  const double norm2 = plancherel_inner(psi, psi).real();
  for (Eigen::Index i = 0; i < gram.direct.rows(); ++i)
    CHECK(std::abs(gram.direct(i, i).real() - norm2) <= 1e-10);

  // PSD up to tolerance
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      0.5 * (gram.direct + gram.direct.adjoint()));
  CHECK(es.eigenvalues().minCoeff() >= -1e-10);

  CHECK_THROWS_AS(gram_oracle(psi, box_construction().lattice, 1, 100), spec_error);
}

TEST_CASE("gram block structure under the condition") {
  // fixture satisfies the condition: gamma_1 != 0 blocks vanish
  const FixtureResult& fix = fixture();
  const GramPair gram = gram_oracle(fix.field, fix.lattice, 1, 3);
  const long block = 7;  // k runs fastest
  const long blocks = static_cast<long>(gram.ball.size()) / block;
  for (long br = 0; br < blocks; ++br) {
    for (long bc = 0; bc < blocks; ++bc) {
      if (br == bc) continue;
      const double off_mass = gram.direct.block(br * block, bc * block, block, block)
                                  .cwiseAbs()
                                  .maxCoeff();
      CHECK(off_mass <= 1e-10);
    }
  }

  // Prop-style equivalence: <psi, L_{gamma1 gamma2} psi> ~ delta_{gamma1,0} <psi, L_gamma2 psi>
  const GramPair central = gram_oracle(fix.field, fix.lattice, 0, 3);
  for (long br = 0; br < blocks; ++br) {
    const Eigen::MatrixXcd diff =
        gram.direct.block(br * block, br * block, block, block) - central.direct;
    CHECK(diff.cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("synthesis diagnostic stays inside the Gram spectrum") {
  const FixtureResult& fix = fixture();
  const SynthesisDiagnostic diag =
      riesz_synthesis_diagnostic(fix.field, fix.lattice, 1, 2, 25, 7);
  CHECK(diag.min_ratio == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(diag.max_ratio == doctest::Approx(1.0).epsilon(1e-8));

  const OperatorField& psi = box_field();
  const EigSummary eigs = finite_frame_probe(psi, box_construction().lattice, 1, 2);
  const SynthesisDiagnostic spread =
      riesz_synthesis_diagnostic(psi, box_construction().lattice, 1, 2, 25, 7);
  CHECK(spread.min_ratio >= eigs.min_eig - 1e-10);
  CHECK(spread.max_ratio <= eigs.max_eig + 1e-10);
  CHECK(spread.max_ratio > spread.min_ratio);
}

TEST_CASE("finite_frame_probe") {
  const FixtureResult& fix = fixture();
  const EigSummary ortho = finite_frame_probe(fix.field, fix.lattice, 1, 3);
  CHECK(ortho.min_eig == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(ortho.max_eig == doctest::Approx(1.0).epsilon(1e-8));

  // separated psi_eps: upper bound B = 1 plus truncation slack
  const GaborConstruction sep = GaborConstruction::create(
      WindowSpec::box(0.0, 1.0), 0.25, 4.0, 1.0, 256, 1.0 / 64.0, 1);
  const OperatorField psi = band_field(sep);
  const EigSummary eigs = finite_frame_probe(psi, sep.lattice, 1, 2);
  CHECK(eigs.max_eig <= 1.05);

  // Gamma_2 reduction: spectra of the diagonal blocks match the central Gram
  const GramPair full = gram_oracle(fix.field, fix.lattice, 1, 3);
  const GramPair central = gram_oracle(fix.field, fix.lattice, 0, 3);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_central(
      0.5 * (central.direct + central.direct.adjoint()));
  const long block = 7;
  for (long br = 0; br * block < static_cast<long>(full.ball.size()); ++br) {
    Eigen::MatrixXcd blk = full.direct.block(br * block, br * block, block, block);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_blk(0.5 * (blk + blk.adjoint()));
    CHECK((es_blk.eigenvalues() - es_central.eigenvalues()).cwiseAbs().maxCoeff() <=
          1e-8);
  }
}
