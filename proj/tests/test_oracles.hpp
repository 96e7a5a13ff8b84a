// test_oracles.hpp
//
// Brute-force oracles kept independent of the library's fast paths: every
// operator is densified and traced directly, sums are plain double loops.

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

#include <random>

#include "heis/field.hpp"

namespace heis_test {

using heis::cplx;

// trace(A B^dagger) from the densified matrices, elementwise.
inline cplx dense_hs_inner(const heis::HSOperator& a, const heis::HSOperator& b) {
  const Eigen::MatrixXcd am = a.densified();
  const Eigen::MatrixXcd bm = b.densified();
  cplx total(0.0, 0.0);
  for (Eigen::Index r = 0; r < am.rows(); ++r)
    for (Eigen::Index c = 0; c < am.cols(); ++c)
      total += am(r, c) * std::conj(bm(r, c));
  return total;
}

// (1/M) sum over all band entries of rho * dense trace, as a plain loop.
inline cplx plancherel_double_loop(const heis::OperatorField& f,
                                   const heis::OperatorField& g) {
  const heis::FrequencyGrid& fg = f.fgrid();
  cplx total(0.0, 0.0);
  for (int i = 0; i < fg.alpha_res; ++i) {
    for (int j = fg.band_lo; j <= fg.band_hi; ++j) {
      const heis::HSOperator* fop = f.entry(i, j);
      const heis::HSOperator* gop = g.entry(i, j);
      if (!fop || !gop) continue;
      total += dense_hs_inner(*fop, *gop) * fg.rho(fg.lambda(i, j));
    }
  }
  return total / static_cast<double>(fg.alpha_res);
}

inline heis::WindowVector random_window(const heis::SpatialGridPtr& grid,
                                        std::mt19937_64& rng, double support_lo,
                                        double support_hi) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  heis::WindowVector w;
  w.grid = grid;
  w.values.setZero(grid->total());
  for (long k = 0; k < grid->total(); ++k) {
    const double x = grid->node(k)[0];
    if (x >= support_lo && x < support_hi) w.values[k] = cplx(gauss(rng), gauss(rng));
  }
  const double nrm = w.norm();
  if (nrm > 0.0) w.values /= nrm;
  return w;
}

inline heis::GroupElement random_element(std::mt19937_64& rng, int d, double scale) {
  std::uniform_real_distribution<double> unif(-scale, scale);
  heis::GroupElement g;
  g.p.resize(d);
  g.q.resize(d);
  for (int i = 0; i < d; ++i) {
    g.p[i] = unif(rng);
    g.q[i] = unif(rng);
  }
  g.t = unif(rng);
  return g;
}

}  // namespace heis_test
