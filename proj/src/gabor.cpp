// gabor.cpp

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

#include "heis/gabor.hpp"

#include <cmath>
#include <vector>

namespace heis {

namespace {

constexpr double kGaussTailSigmas = 8.0;

// Support of the scaled window in x, conservative for Gaussians.
void scaled_support(const WindowSpec& w, double lambda, double* lo, double* hi) {
  switch (w.kind) {
    case WindowSpec::Kind::kBox:
      *lo = w.box_lo / lambda;
      *hi = w.box_hi / lambda;
      if (*lo > *hi) std::swap(*lo, *hi);
      return;
    case WindowSpec::Kind::kGauss:
      *hi = kGaussTailSigmas * w.sigma / std::abs(lambda);
      *lo = -*hi;
      return;
    case WindowSpec::Kind::kSamples: {
      const auto& g = *w.samples_grid;
      *lo = g.lo()[0] / lambda;
      *hi = (g.lo()[0] + g.n_axis() * g.h()) / lambda;
      if (*lo > *hi) std::swap(*lo, *hi);
      return;
    }
  }
}

}  // namespace

GaborConstruction GaborConstruction::create(const WindowSpec& window, double epsilon,
                                            double a, double b, int alpha_res,
                                            double h, int margin_r1) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw spec_error("gabor construction: epsilon must lie in (0,1)");
  if (margin_r1 < 0) throw spec_error("gabor construction: margin_r1 must be >= 0");
  const double steps = a / h;
  if (std::abs(steps - std::round(steps)) > 1e-9)
    throw spec_error("gabor construction: h must divide the lattice step a");

  double wlo = 0.0, whi = 0.0;
  scaled_support(window, epsilon, &wlo, &whi);  // widest member of the band
  const double margin = margin_r1 * a + 1.0;
  const double lo = std::floor((wlo - margin) / h) * h;
  const double hi = std::ceil((whi + margin) / h) * h;

  GaborConstruction c;
  c.window = window;
  c.epsilon = epsilon;
  c.fgrid = FrequencyGrid(alpha_res, 0, 0, 1);
  c.grid = make_grid_1d(lo, hi, h);
  c.lattice = std::make_shared<const LatticeSpec>(
      Eigen::MatrixXd::Constant(1, 1, a), Eigen::MatrixXd::Constant(1, 1, b));

  const WindowVector u = sample_window(window, c.grid);
  if (std::abs(u.norm() - 1.0) > 1e-10)
    throw spec_error("gabor construction: window is not unit norm on the grid");
  return c;
}

WindowVector scale_window(const WindowSpec& w, const SpatialGridPtr& grid,
                          double lambda) {
  if (lambda == 0.0) throw spec_error("scale_window: lambda must be nonzero");
  double slo = 0.0, shi = 0.0;
  scaled_support(w, lambda, &slo, &shi);
  for (int axis = 0; axis < grid->dim(); ++axis) {
    const double dom_lo = grid->lo()[axis];
    const double dom_hi = dom_lo + grid->n_axis() * grid->h();
    if (slo < dom_lo - 0.5 * grid->h() || shi > dom_hi + 0.5 * grid->h())
      throw grid_error("scale_window: scaled support overflows the grid domain");
  }

  const int d = grid->dim();
  const double amp = std::pow(std::abs(lambda), 0.5 * d);
  WindowVector out;
  out.grid = grid;
  out.values.resize(grid->total());
  std::vector<int> idx(d);
  for (long flat = 0; flat < grid->total(); ++flat) {
    grid->unflatten(flat, idx.data());
    cplx v(amp, 0.0);
    for (int axis = 0; axis < d; ++axis)
      v *= window_value(w, lambda * grid->axis_coord(axis, idx[axis]));
    out.values[flat] = v;
  }
  return out;
}

OperatorField band_field(const GaborConstruction& c) {
  OperatorField field(c.fgrid, c.grid);
  const int m_res = c.fgrid.alpha_res;
  std::vector<WindowVector> windows(m_res);
  std::vector<char> present(m_res, 0);
  parallel_for(m_res, [&](long i) {
    const double alpha = c.fgrid.alpha(static_cast<int>(i));
    if (alpha <= c.epsilon || alpha > 1.0) return;
    windows[i] = scale_window(c.window, c.grid, alpha);
    present[i] = 1;
  });
  for (int i = 0; i < m_res; ++i) {
    if (!present[i]) continue;
    WindowVector right = windows[i];
    field.set_entry(i, 0, HSOperator::rank_one(std::move(windows[i]), std::move(right)));
  }
  return field;
}

double auto_bracket_deviation(const GaborConstruction& c, const OperatorField& field) {
  const BracketProfile prof = bracket_profile(field, field);
  const int d = field.grid()->dim();
  double dev = 0.0;
  for (Eigen::Index i = 0; i < prof.values.size(); ++i) {
    const double alpha = prof.alpha(static_cast<int>(i));
    const double target =
        (alpha > c.epsilon && alpha <= 1.0) ? std::pow(alpha, d) : 0.0;
    dev = std::max(dev, std::abs(prof.values[i] - target));
  }
  return dev;
}

CrossBracketValue cross_bracket(const GaborConstruction& c, const OperatorField& field,
                                const LatticePoint& gamma1, int i) {
  if (gamma1.k != 0) throw spec_error("cross_bracket: gamma_1 must have k = 0");
  CrossBracketValue out;
  out.via_bracket = bracket_at(left_translate(field, embed(gamma1)), field, i);

  const HSOperator* entry = field.entry(i, 0);
  if (!entry) {
    out.via_overlap = cplx(0.0, 0.0);
  } else {
    const double alpha = c.fgrid.alpha(i);
    const WindowVector& u = entry->left();
    const WindowVector moved = schrodinger_apply(alpha, embed(gamma1), u);
    const double n2 = wv_inner(u, u).real();
    out.via_overlap = c.fgrid.rho(alpha) * wv_inner(moved, u) * n2;
  }
  out.difference = std::abs(out.via_bracket - out.via_overlap);
  return out;
}

CertReport build_frame_example(const GaborConstruction& c, int r1, double tol) {
  const OperatorField field = band_field(c);
  const BracketProfile autop = bracket_profile(field, field);
  const double tau = default_tau(autop);
  CertReport report = frame_certify(field, c.lattice, r1, tau, tol);
  report.mode = "frame_example";
  return report;
}

FixtureResult orthonormal_fixture(int alpha_res, double h, int a, int b,
                                  int margin_r1) {
  if (a < 1 || b < 1) throw spec_error("fixture: lattice steps must be positive");
  if ((static_cast<long>(a) * b) % (2L * alpha_res) != 0)
    throw spec_error("fixture: a*b must be a multiple of 2*alpha_res");
  const double steps = a / h;
  if (std::abs(steps - std::round(steps)) > 1e-9)
    throw spec_error("fixture: h must divide the block width a");

  const double lo = -(margin_r1 * static_cast<double>(a) + 1.0);
  const double hi = (margin_r1 + 1) * static_cast<double>(a) + 1.0;
  SpatialGridPtr grid = make_grid_1d(lo, hi, h);

  WindowVector u = sample_window(WindowSpec::box(0.0, a), grid);
  u.values /= u.norm();

  FrequencyGrid fgrid(alpha_res, 0, 0, 1);
  OperatorField field(fgrid, grid);
  for (int i = 0; i < alpha_res; ++i) {
    const double scale = 1.0 / std::sqrt(fgrid.rho(fgrid.alpha(i)));
    WindowVector left = u;
    left.values *= scale;
    field.set_entry(i, 0, HSOperator::rank_one(std::move(left), u));
  }

  FixtureResult out{std::move(field),
                    std::make_shared<const LatticeSpec>(
                        Eigen::MatrixXd::Constant(1, 1, a),
                        Eigen::MatrixXd::Constant(1, 1, b))};
  return out;
}

}  // namespace heis
