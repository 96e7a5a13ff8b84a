// analysis.cpp

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

#include "heis/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

namespace heis {

namespace {

// The gamma_1 condition and the certifiers all consume [psi, L_{gamma_1}psi]
// profiles; translation happens on the second slot.
BracketProfile translated_profile(const OperatorField& psi, const LatticePoint& g1) {
  return bracket_profile(psi, left_translate(psi, embed(g1)));
}

std::vector<int> difference_key(const LatticePoint& d) {
  std::vector<int> key;
  key.reserve(2 * d.n.size() + 1);
  for (Eigen::Index i = 0; i < d.n.size(); ++i) key.push_back(d.n[i]);
  for (Eigen::Index i = 0; i < d.m.size(); ++i) key.push_back(d.m[i]);
  key.push_back(static_cast<int>(d.k));
  return key;
}

// Direct Gram over the ball. Entries depend only on the group difference
// gamma^{-1} gamma', so each distinct difference is computed once, from the
// first pair realizing it (both factors translated by <= r1, which is what
// the default domain margins guarantee). Representatives are grouped by row
// so each row's field is translated once; rows run in parallel.
Eigen::MatrixXcd gram_direct(const OperatorField& psi,
                             const std::vector<LatticePoint>& ball) {
  const long n = static_cast<long>(ball.size());
  std::map<std::vector<int>, std::pair<long, long>> rep;  // key -> first pair
  std::vector<std::vector<int>> keys(static_cast<size_t>(n) * n);
  std::vector<std::vector<long>> row_reps(n);  // columns owned by each row
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      auto key = difference_key(lattice_compose(lattice_inverse(ball[r]), ball[c]));
      if (rep.try_emplace(key, r, c).second) row_reps[r].push_back(c);
      keys[r * n + c] = std::move(key);
    }
  }

  std::vector<std::map<std::vector<int>, cplx>> row_values(n);
  parallel_for(n, [&](long r) {
    if (row_reps[r].empty()) return;
    const OperatorField row_field = left_translate(psi, embed(ball[r]));
    for (const long c : row_reps[r]) {
      row_values[r][keys[r * n + c]] =
          plancherel_inner(row_field, left_translate(psi, embed(ball[c])));
    }
  });
  std::map<std::vector<int>, cplx> memo;
  for (long r = 0; r < n; ++r) memo.merge(row_values[r]);

  Eigen::MatrixXcd gram(n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) gram(r, c) = memo[keys[r * n + c]];
  return gram;
}

// Gram via the covariance reduction and bracket Fourier coefficients:
//   <L_gamma psi, L_gamma' psi> = <psi, L_{gamma''} psi>
//                              = (1/M) sum_i [psi, L_{gamma_1''} psi](alpha_i)
//                                e^{-2 pi i gamma_2'' alpha_i}
// with gamma'' = gamma^{-1} gamma'.
Eigen::MatrixXcd gram_bracket(const OperatorField& psi,
                              const std::vector<LatticePoint>& ball) {
  const long n = static_cast<long>(ball.size());
  std::map<std::vector<int>, BracketProfile> profiles;
  Eigen::MatrixXcd gram(n, n);
  const int m_res = psi.fgrid().alpha_res;
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      const LatticePoint diff =
          lattice_compose(lattice_inverse(ball[r]), ball[c]);
      const LatticePoint g1 = gamma1_part(diff);
      auto key = difference_key(g1);
      auto it = profiles.find(key);
      if (it == profiles.end())
        it = profiles.emplace(std::move(key), translated_profile(psi, g1)).first;
      const BracketProfile& prof = it->second;
      cplx total(0.0, 0.0);
      for (int i = 0; i < m_res; ++i) {
        const double ang = -kTwoPi * static_cast<double>(diff.k) * prof.alpha(i);
        total += prof.values[i] * std::polar(1.0, ang);
      }
      gram(r, c) = total / static_cast<double>(m_res);
    }
  }
  return gram;
}

void fill_common(CertReport& report, const OperatorField& psi,
                 const LatticeSpecPtr& lattice, int r1, int r2, double tau,
                 double tol, const std::string& mode) {
  report.mode = mode;
  report.alpha_res = psi.fgrid().alpha_res;
  report.band_lo = psi.fgrid().band_lo;
  report.band_hi = psi.fgrid().band_hi;
  report.r1 = r1;
  report.r2 = r2;
  report.tau = tau;
  report.tol = tol;
  report.lattice = lattice;
  report.grid = psi.grid();
}

}  // namespace

int SpectralSupport::count() const {
  return static_cast<int>(std::count(mask.begin(), mask.end(), true));
}
bool SpectralSupport::all() const { return count() == static_cast<int>(mask.size()); }
bool SpectralSupport::none() const { return count() == 0; }

double default_tau(const BracketProfile& auto_profile) {
  double peak = 0.0;
  for (Eigen::Index i = 0; i < auto_profile.values.size(); ++i)
    peak = std::max(peak, auto_profile.values[i].real());
  return peak > 0.0 ? 1e-9 * peak : 1e-300;
}

SpectralSupport spectral_support(const OperatorField& psi, double tau) {
  if (!(tau > 0.0)) throw spec_error("spectral_support: tau must be positive");
  const BracketProfile prof = bracket_profile(psi, psi);
  SpectralSupport out;
  out.tau = tau;
  out.mask.resize(prof.values.size());
  for (Eigen::Index i = 0; i < prof.values.size(); ++i)
    out.mask[i] = prof.values[i].real() > tau;
  return out;
}

Eigen::VectorXcd s_map(const OperatorField& phi, const OperatorField& psi, double tau) {
  check_same_field_grids(phi, psi);
  const BracketProfile cross = bracket_profile(phi, psi);
  const BracketProfile autop = bracket_profile(psi, psi);
  Eigen::VectorXcd out(cross.values.size());
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const double denom = autop.values[i].real();
    out[i] = denom > tau ? cross.values[i] / denom : cplx(0.0, 0.0);
  }
  return out;
}

double isometry_residual(const OperatorField& psi,
                         const std::map<long long, cplx>& coeffs, double tau) {
  const int m_res = psi.fgrid().alpha_res;
  for (const auto& [k, c] : coeffs) {
    (void)c;
    if (std::llabs(k) > m_res / 4)
      throw spec_error("isometry_residual: coefficient index beyond the M/4 cap");
  }
  const OperatorField phi = combine_central_translates(psi, coeffs);
  const Eigen::VectorXcd s = s_map(phi, psi, tau);
  const BracketProfile autop = bracket_profile(psi, psi);
  double weighted = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    weighted += std::norm(s[i]) * autop.values[i].real();
  weighted /= m_res;
  const double phi_norm2 = plancherel_inner(phi, phi).real();
  return std::abs(weighted - phi_norm2);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertified: return "CERTIFIED";
    case Verdict::kRefuted: return "REFUTED";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

ConditionCheck check_condition(const OperatorField& psi, const LatticeSpecPtr& lattice,
                               int r1, double tau) {
  const BracketProfile autop = bracket_profile(psi, psi);
  ConditionCheck out;
  for (const LatticePoint& g1 : lattice_ball(lattice, r1, 0)) {
    if (g1.gamma1_is_zero()) continue;
    const BracketProfile prof = translated_profile(psi, g1);
    for (Eigen::Index i = 0; i < prof.values.size(); ++i) {
      if (!(autop.values[i].real() > tau)) continue;  // alpha outside E_psi
      const double mag = std::abs(prof.values[i]);
      if (mag > out.residual) {
        out.residual = mag;
        out.worst = ConditionViolation{g1.n, g1.m, prof.alpha(static_cast<int>(i)),
                                       prof.values[i]};
      }
    }
  }
  return out;
}

CertReport check_onb(const OperatorField& psi, const LatticeSpecPtr& lattice,
                     int r1, int r2, double tau, double tol) {
  CertReport report;
  fill_common(report, psi, lattice, r1, r2, tau, tol, "onb");

  const BracketProfile autop = bracket_profile(psi, psi);
  double lo = 0.0, hi = 0.0;
  if (autop.values.size() > 0) {
    lo = autop.values[0].real();
    hi = lo;
    for (Eigen::Index i = 1; i < autop.values.size(); ++i) {
      lo = std::min(lo, autop.values[i].real());
      hi = std::max(hi, autop.values[i].real());
    }
  }
  report.a_est = lo;
  report.b_est = hi;

  // Orthonormality asks for [psi, L_{gamma_1} psi] = delta_{gamma_1,0} at
  // every midpoint, not just on E_psi.
  double cross = 0.0;
  for (const LatticePoint& g1 : lattice_ball(lattice, r1, 0)) {
    if (g1.gamma1_is_zero()) continue;
    const BracketProfile prof = translated_profile(psi, g1);
    for (Eigen::Index i = 0; i < prof.values.size(); ++i) {
      const double mag = std::abs(prof.values[i]);
      if (mag > cross) {
        cross = mag;
        report.violation = ConditionViolation{
            g1.n, g1.m, prof.alpha(static_cast<int>(i)), prof.values[i]};
      }
    }
  }
  report.condition_residual = cross;

  double central = 0.0;
  for (int k = 1; k <= r2; ++k) {
    cplx coef(0.0, 0.0);
    for (Eigen::Index i = 0; i < autop.values.size(); ++i)
      coef += autop.values[i] *
              std::polar(1.0, -kTwoPi * k * autop.alpha(static_cast<int>(i)));
    central = std::max(central, std::abs(coef) / std::max(1, report.alpha_res));
  }
  report.central_residual = central;

  const double diag_dev = std::max(std::abs(lo - 1.0), std::abs(hi - 1.0));
  report.verdict = (cross <= tol && diag_dev <= tol) ? Verdict::kCertified
                                                     : Verdict::kRefuted;
  if (report.verdict == Verdict::kCertified) report.violation.reset();
  return report;
}

CertReport riesz_certify(const OperatorField& psi, const LatticeSpecPtr& lattice,
                         int r1, double tau, double tol) {
  CertReport report;
  fill_common(report, psi, lattice, r1, 0, tau, tol, "riesz");

  const ConditionCheck cond = check_condition(psi, lattice, r1, tau);
  report.condition_residual = cond.residual;
  if (cond.residual > tol) {
    report.verdict = Verdict::kInconclusive;
    report.violation = cond.worst;
    return report;
  }

  const BracketProfile autop = bracket_profile(psi, psi);
  double lo = autop.values.size() ? autop.values[0].real() : 0.0;
  double hi = lo;
  for (Eigen::Index i = 1; i < autop.values.size(); ++i) {
    lo = std::min(lo, autop.values[i].real());
    hi = std::max(hi, autop.values[i].real());
  }
  report.a_est = lo;
  report.b_est = hi;
  report.verdict = lo >= tol ? Verdict::kCertified : Verdict::kRefuted;
  return report;
}

CertReport frame_certify(const OperatorField& psi, const LatticeSpecPtr& lattice,
                         int r1, double tau, double tol) {
  CertReport report;
  fill_common(report, psi, lattice, r1, 0, tau, tol, "frame");

  const ConditionCheck cond = check_condition(psi, lattice, r1, tau);
  report.condition_residual = cond.residual;
  if (cond.residual > tol) {
    report.verdict = Verdict::kInconclusive;
    report.violation = cond.worst;
    return report;
  }

  const BracketProfile autop = bracket_profile(psi, psi);
  bool any = false;
  double lo = 0.0, hi = 0.0;
  for (Eigen::Index i = 0; i < autop.values.size(); ++i) {
    const double v = autop.values[i].real();
    if (!(v > tau)) continue;
    if (!any) {
      lo = hi = v;
      any = true;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  report.a_est = lo;
  report.b_est = hi;
  report.verdict = (any && lo >= tau) ? Verdict::kCertified : Verdict::kRefuted;
  return report;
}

GramPair gram_oracle(const OperatorField& psi, const LatticeSpecPtr& lattice,
                     int r1, int r2) {
  if (r2 > psi.fgrid().alpha_res / 4)
    throw spec_error("gram_oracle: r2 beyond the M/4 Nyquist cap");
  GramPair out;
  out.ball = lattice_ball(lattice, r1, r2);
  out.direct = gram_direct(psi, out.ball);
  out.via_bracket = gram_bracket(psi, out.ball);
  const long n = out.direct.rows();
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      out.max_abs_entry = std::max(out.max_abs_entry, std::abs(out.direct(r, c)));
      out.max_deviation =
          std::max(out.max_deviation, std::abs(out.direct(r, c) - out.via_bracket(r, c)));
      out.max_asymmetry = std::max(
          out.max_asymmetry, std::abs(out.direct(r, c) - std::conj(out.direct(c, r))));
    }
  }
  out.hermitian = out.max_asymmetry <= 1e-10;
  return out;
}

EigSummary finite_frame_probe(const OperatorField& psi, const LatticeSpecPtr& lattice,
                              int r1, int r2) {
  const std::vector<LatticePoint> ball = lattice_ball(lattice, r1, r2);
  if (ball.empty()) throw spec_error("finite_frame_probe: empty ball");
  const Eigen::MatrixXcd gram = gram_direct(psi, ball);
  const Eigen::MatrixXcd herm = 0.5 * (gram + gram.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("finite_frame_probe: eigensolver failed");
  EigSummary out;
  out.eigenvalues = solver.eigenvalues();
  out.min_eig = out.eigenvalues.minCoeff();
  out.max_eig = out.eigenvalues.maxCoeff();
  return out;
}

SynthesisDiagnostic riesz_synthesis_diagnostic(const OperatorField& psi,
                                               const LatticeSpecPtr& lattice, int r1,
                                               int r2, int trials,
                                               std::uint64_t seed) {
  if (trials < 1) throw spec_error("synthesis diagnostic: trials must be >= 1");
  const std::vector<LatticePoint> ball = lattice_ball(lattice, r1, r2);
  const Eigen::MatrixXcd gram = gram_direct(psi, ball);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SynthesisDiagnostic out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXcd a(gram.rows());
    for (Eigen::Index i = 0; i < a.size(); ++i) a[i] = cplx(gauss(rng), gauss(rng));
    const double ratio = (a.dot(gram * a)).real() / a.squaredNorm();
    if (t == 0) {
      out.min_ratio = out.max_ratio = ratio;
    } else {
      out.min_ratio = std::min(out.min_ratio, ratio);
      out.max_ratio = std::max(out.max_ratio, ratio);
    }
  }
  return out;
}

}  // namespace heis
