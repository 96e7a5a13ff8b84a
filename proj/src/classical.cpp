// classical.cpp

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

#include "heis/classical.hpp"

#include <cmath>
#include <vector>

namespace heis {

LineGrid::LineGrid(int d_in, int resolution_in, int radius_in)
    : d(d_in), resolution(resolution_in), radius(radius_in) {
  if (d < 1) throw spec_error("line grid: d must be >= 1");
  if (resolution < 2) throw spec_error("line grid: resolution must be >= 2");
  if (radius < 1) throw spec_error("line grid: truncation radius must be >= 1");
}

namespace {

// Visits every integer vector in [-r, r]^d.
void for_each_shift(int d, int r, const std::function<void(const Eigen::VectorXd&)>& fn) {
  Eigen::VectorXd l = Eigen::VectorXd::Constant(d, -r);
  const long per_axis = 2L * r + 1;
  long count = 1;
  for (int i = 0; i < d; ++i) count *= per_axis;
  for (long idx = 0; idx < count; ++idx) {
    fn(l);
    for (int axis = d - 1; axis >= 0; --axis) {
      if (l[axis] < r) {
        l[axis] += 1.0;
        break;
      }
      l[axis] = -r;
    }
  }
}

}  // namespace

cplx shift_bracket(const LineGrid& g, const ScalarField& phi_hat,
                   const ScalarField& psi_hat, const Eigen::VectorXd& xi) {
  if (xi.size() != g.d) throw spec_error("shift_bracket: xi dimension mismatch");
  cplx total(0.0, 0.0);
  for_each_shift(g.d, g.radius, [&](const Eigen::VectorXd& l) {
    const Eigen::VectorXd arg = xi + l;
    total += phi_hat(arg) * std::conj(psi_hat(arg));
  });
  return total;
}

cplx zak_transform(const LineGrid& g, const ScalarField& psi,
                   const Eigen::VectorXd& x, const Eigen::VectorXd& xi) {
  if (x.size() != g.d || xi.size() != g.d)
    throw spec_error("zak_transform: point dimension mismatch");
  cplx total(0.0, 0.0);
  for_each_shift(g.d, g.radius, [&](const Eigen::VectorXd& k) {
    total += std::polar(1.0, -kTwoPi * k.dot(xi)) * psi(x - k);
  });
  return total;
}

cplx gabor_bracket(const LineGrid& g, const ScalarField& phi, const ScalarField& psi,
                   const Eigen::VectorXd& x, const Eigen::VectorXd& xi) {
  return zak_transform(g, phi, x, xi) * std::conj(zak_transform(g, psi, x, xi));
}

cplx shift_coefficient(const LineGrid& g, const ScalarField& phi_hat,
                       const ScalarField& psi_hat, long k) {
  if (g.d != 1) throw spec_error("shift_coefficient: d = 1 only");
  const int q = g.resolution * 8;  // torus quadrature resolution
  cplx total(0.0, 0.0);
  for (int i = 0; i < q; ++i) {
    const double xi = (i + 0.5) / q;
    total += shift_bracket(g, phi_hat, psi_hat, Eigen::VectorXd::Constant(1, xi)) *
             std::polar(1.0, -kTwoPi * static_cast<double>(k) * xi);
  }
  return total / static_cast<double>(q);
}

cplx direct_shift_inner(const LineGrid& g, const ScalarField& phi_hat,
                        const ScalarField& psi_hat, long k) {
  if (g.d != 1) throw spec_error("direct_shift_inner: d = 1 only");
  const double h = 1.0 / g.resolution;
  const double half_width = g.radius + 2.0;
  const long n = std::lround(2.0 * half_width / h);
  cplx total(0.0, 0.0);
  for (long i = 0; i < n; ++i) {
    const double xi = -half_width + (i + 0.5) * h;
    const Eigen::VectorXd arg = Eigen::VectorXd::Constant(1, xi);
    total += phi_hat(arg) * std::conj(psi_hat(arg)) *
             std::polar(1.0, -kTwoPi * static_cast<double>(k) * xi);
  }
  return h * total;
}

cplx gabor_coefficient(const LineGrid& g, const ScalarField& phi,
                       const ScalarField& psi, long l, long k) {
  if (g.d != 1) throw spec_error("gabor_coefficient: d = 1 only");
  const int q = g.resolution;
  cplx total(0.0, 0.0);
  for (int ix = 0; ix < q; ++ix) {
    const double x = (ix + 0.5) / q;
    const Eigen::VectorXd xv = Eigen::VectorXd::Constant(1, x);
    for (int ixi = 0; ixi < q; ++ixi) {
      const double xi = (ixi + 0.5) / q;
      total += gabor_bracket(g, phi, psi, xv, Eigen::VectorXd::Constant(1, xi)) *
               std::polar(1.0, -kTwoPi * (static_cast<double>(k) * xi -
                                          static_cast<double>(l) * x));
    }
  }
  return total / static_cast<double>(q) / static_cast<double>(q);
}

cplx direct_gabor_inner(const LineGrid& g, const ScalarField& phi,
                        const ScalarField& psi, long l, long k) {
  if (g.d != 1) throw spec_error("direct_gabor_inner: d = 1 only");
  const double h = 1.0 / (4.0 * g.resolution);
  const double half_width = g.radius + 2.0 + std::abs(static_cast<double>(k));
  const long n = std::lround(2.0 * half_width / h);
  cplx total(0.0, 0.0);
  for (long i = 0; i < n; ++i) {
    const double x = -half_width + (i + 0.5) * h;
    const cplx mltk = std::polar(1.0, -kTwoPi * static_cast<double>(l) * x) *
                      psi(Eigen::VectorXd::Constant(1, x - k));
    total += phi(Eigen::VectorXd::Constant(1, x)) * std::conj(mltk);
  }
  return h * total;
}

}  // namespace heis
