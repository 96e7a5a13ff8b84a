// classical.hpp
//
// Abelian baseline brackets for cross-validation: the integer-shift bracket
//   [phi, psi](xi) = sum_{l in Z^d} phi_hat(xi + l) conj(psi_hat(xi + l))
// and the Gabor bracket built from the Zak transform
//   Z psi(x, xi) = sum_{k in Z^d} e^{-2 pi i k.xi} psi(x - k),
//   [phi, psi](x, xi) = Z phi(x, xi) conj(Z psi(x, xi)).
// Periodization sums are truncated at the stored radius (exact for
// compactly supported inputs, tail < 1e-12 at radius 8 for unit-scale
// Gaussians).

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

#include <functional>

#include <Eigen/Core>

#include "heis/common.hpp"

namespace heis {

using ScalarField = std::function<cplx(const Eigen::VectorXd&)>;

struct LineGrid {
  int d = 1;
  int resolution = 64;  // quadrature samples per unit cell and axis
  int radius = 8;       // truncation radius of periodization sums

  LineGrid(int d, int resolution, int radius);
};

cplx shift_bracket(const LineGrid& g, const ScalarField& phi_hat,
                   const ScalarField& psi_hat, const Eigen::VectorXd& xi);

cplx zak_transform(const LineGrid& g, const ScalarField& psi,
                   const Eigen::VectorXd& x, const Eigen::VectorXd& xi);

cplx gabor_bracket(const LineGrid& g, const ScalarField& phi, const ScalarField& psi,
                   const Eigen::VectorXd& x, const Eigen::VectorXd& xi);

// Midpoint-rule cross checks (d = 1):
//   shift_coefficient  = int_0^1 shift_bracket(xi) e^{-2 pi i k xi} dxi
//   direct_shift_inner = int_R phi_hat(xi) conj(psi_hat(xi)) e^{-2 pi i k xi} dxi
//                      = <phi, T_k psi> for T_k psi(x) = psi(x + k)
//   gabor_coefficient  = int_0^1 int_0^1 gabor_bracket e^{-2 pi i (k xi - l x)} dx dxi
//   direct_gabor_inner = <phi, M_l T_k psi>, M_l T_k psi(x) = e^{-2 pi i l x} psi(x - k)
cplx shift_coefficient(const LineGrid& g, const ScalarField& phi_hat,
                       const ScalarField& psi_hat, long k);
cplx direct_shift_inner(const LineGrid& g, const ScalarField& phi_hat,
                        const ScalarField& psi_hat, long k);
cplx gabor_coefficient(const LineGrid& g, const ScalarField& phi,
                       const ScalarField& psi, long l, long k);
cplx direct_gabor_inner(const LineGrid& g, const ScalarField& phi,
                        const ScalarField& psi, long l, long k);

}  // namespace heis
