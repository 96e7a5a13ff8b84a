// analysis.hpp
//
// Certification of orthonormal-basis / Riesz-family / frame properties of
// the lattice translates {L_gamma psi} from the bracket profile, the S_psi
// isometry machinery, and Gram-matrix cross checks.
//
// "a.e. alpha" statements are checked at every grid midpoint; essential
// inf/sup are grid min/max; the gamma_1 condition is checked on a finite
// ball, so verdicts are always "certified up to radius r1".

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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heis/bracket.hpp"
#include "heis/group.hpp"

namespace heis {

struct SpectralSupport {
  double tau = 0.0;
  std::vector<bool> mask;  // mask[i] <=> [psi,psi](alpha_i) > tau

  int count() const;
  bool all() const;
  bool none() const;
};

// Relative support threshold: 1e-9 * max_alpha [psi,psi] (scaling psi
// rescales nothing structurally). Returns a tiny positive floor for the
// zero profile so the mask comes out empty.
double default_tau(const BracketProfile& auto_profile);

SpectralSupport spectral_support(const OperatorField& psi, double tau);

// S_psi[phi] on the alpha grid: zero off the support mask, the ratio
// [phi,psi]/[psi,psi] on it.
Eigen::VectorXcd s_map(const OperatorField& phi, const OperatorField& psi, double tau);

// | (1/M) sum_i |S_psi[phi](alpha_i)|^2 [psi,psi](alpha_i) - ||phi||^2 |
// for phi = sum_k coeffs[k] L_{(0,0,k)} psi, |k| <= M/4.
double isometry_residual(const OperatorField& psi,
                         const std::map<long long, cplx>& coeffs, double tau);

enum class Verdict { kCertified, kRefuted, kInconclusive };
const char* to_string(Verdict v);

struct ConditionViolation {
  Eigen::VectorXi n, m;  // the offending gamma_1
  double alpha = 0.0;
  cplx value;
};

struct ConditionCheck {
  double residual = 0.0;  // max over gamma_1 != 0 in the ball, alpha in E_psi
  std::optional<ConditionViolation> worst;
};

// max_{gamma_1 != 0, |(n,m)| <= r1} max_{alpha in E_psi} |[psi, L_{gamma_1} psi](alpha)|.
ConditionCheck check_condition(const OperatorField& psi, const LatticeSpecPtr& lattice,
                               int r1, double tau);

struct CertReport {
  Verdict verdict = Verdict::kInconclusive;
  double a_est = 0.0, b_est = 0.0;
  double condition_residual = 0.0;
  std::optional<ConditionViolation> violation;
  // Informational: max_{0 < |k| <= r2} |(1/M) sum_i [psi,psi](alpha_i) e^{-2 pi i k alpha_i}|
  // (check_onb only; not part of the verdict).
  std::optional<double> central_residual;

  std::string mode;
  int alpha_res = 0, band_lo = 0, band_hi = 0;
  int r1 = 0, r2 = 0;
  double tol = 0.0, tau = 0.0;
  LatticeSpecPtr lattice;
  SpatialGridPtr grid;
};

// CERTIFIED iff |[psi, L_{gamma_1} psi](alpha_i) - delta_{gamma_1,0}| <= tol
// for every gamma_1 in the r1 ball and every midpoint.
CertReport check_onb(const OperatorField& psi, const LatticeSpecPtr& lattice,
                     int r1, int r2, double tau, double tol);

// Requires the gamma_1 condition (else INCONCLUSIVE with the residual
// attached). Bounds taken over the full interval: A_est = min over all
// midpoints of [psi,psi], B_est = max; CERTIFIED iff A_est >= tol.
CertReport riesz_certify(const OperatorField& psi, const LatticeSpecPtr& lattice,
                         int r1, double tau, double tol);

// As riesz_certify but bounds over the masked midpoints only; CERTIFIED iff
// the mask is nonempty and A_est >= tau.
CertReport frame_certify(const OperatorField& psi, const LatticeSpecPtr& lattice,
                         int r1, double tau, double tol);

struct GramPair {
  std::vector<LatticePoint> ball;
  Eigen::MatrixXcd direct;       // <L_gamma psi, L_gamma' psi> via plancherel_inner
  Eigen::MatrixXcd via_bracket;  // via bracket Fourier coefficients (covariance-reduced)
  double max_abs_entry = 0.0;
  double max_deviation = 0.0;    // entrywise |direct - via_bracket|
  double max_asymmetry = 0.0;    // entrywise |G - G^dagger|
  bool hermitian = true;         // max_asymmetry <= 1e-10
};

// Both Gram computations over lattice_ball(r1, r2); requires r2 <= M/4
// (Nyquist cap). Path (b) needs 2*r1 lattice steps of domain headroom.
GramPair gram_oracle(const OperatorField& psi, const LatticeSpecPtr& lattice,
                     int r1, int r2);

struct EigSummary {
  Eigen::VectorXd eigenvalues;  // ascending
  double min_eig = 0.0, max_eig = 0.0;
};

// Spectrum of the truncated direct-path Gram. The max eigenvalue checks the
// upper frame bound; the min eigenvalue is reported but truncation makes it
// useless for refuting the lower bound.
EigSummary finite_frame_probe(const OperatorField& psi, const LatticeSpecPtr& lattice,
                              int r1, int r2);

struct SynthesisDiagnostic {
  double min_ratio = 0.0, max_ratio = 0.0;  // range of ||sum a L psi||^2 / ||a||^2
  int trials = 0;
};

// Samples the synthesis quotient over random coefficient vectors on the
// ball. Diagnostic only: finite sequences bound the Riesz constants from
// inside, they cannot certify them.
SynthesisDiagnostic riesz_synthesis_diagnostic(const OperatorField& psi,
                                               const LatticeSpecPtr& lattice, int r1,
                                               int r2, int trials,
                                               std::uint64_t seed);

}  // namespace heis
