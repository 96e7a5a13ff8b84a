// bracket.hpp
//
// The bracket map on the frequency grid:
//   [F, G](alpha_i) = sum_j <F(alpha_i + j), G(alpha_i + j)>_HS rho(alpha_i + j)
// summed over the stored band in ascending j (serial per alpha, so results
// are bit-reproducible), plus the modulation and covariance residual checks.

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

#include <Eigen/Core>

#include "heis/field.hpp"

namespace heis {

struct BracketProfile {
  int alpha_res = 0;
  Eigen::VectorXcd values;  // one value per midpoint alpha_i

  double alpha(int i) const { return (i + 0.5) / alpha_res; }
};

cplx bracket_at(const OperatorField& f, const OperatorField& g, int i);

// bracket_at for every midpoint; parallel over alpha, deterministic order.
BracketProfile bracket_profile(const OperatorField& f, const OperatorField& g);

// |[F, L_{(0,0,k)}G](alpha_i) - e^{-2 pi i k alpha_i} [F,G](alpha_i)|.
double modulation_residual(const OperatorField& f, const OperatorField& g,
                           long long k, int i);

// |[L_x F, L_{x'} G](alpha_i) - [F, L_{x^{-1}x'} G](alpha_i)|.
double covariance_residual(const OperatorField& f, const OperatorField& g,
                           const GroupElement& x, const GroupElement& xp, int i);

}  // namespace heis
