// bracket.cpp

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

#include "heis/bracket.hpp"

#include <cmath>

namespace heis {

cplx bracket_at(const OperatorField& f, const OperatorField& g, int i) {
  check_same_field_grids(f, g);
  const FrequencyGrid& fg = f.fgrid();
  if (i < 0 || i >= fg.alpha_res) throw spec_error("bracket: alpha index out of range");
  cplx total(0.0, 0.0);
  for (int j = fg.band_lo; j <= fg.band_hi; ++j) {
    const HSOperator* fop = f.entry(i, j);
    if (!fop) continue;
    const HSOperator* gop = g.entry(i, j);
    if (!gop) continue;
    total += hs_inner(*fop, *gop) * fg.rho(fg.lambda(i, j));
  }
  return total;
}

BracketProfile bracket_profile(const OperatorField& f, const OperatorField& g) {
  check_same_field_grids(f, g);
  BracketProfile out;
  out.alpha_res = f.fgrid().alpha_res;
  out.values.resize(out.alpha_res);
  parallel_for(out.alpha_res, [&](long i) {
    out.values[i] = bracket_at(f, g, static_cast<int>(i));
  });
  return out;
}

double modulation_residual(const OperatorField& f, const OperatorField& g,
                           long long k, int i) {
  GroupElement gamma2 = GroupElement::identity(f.grid()->dim());
  gamma2.t = static_cast<double>(k);
  const cplx lhs = bracket_at(f, left_translate(g, gamma2), i);
  const cplx base = bracket_at(f, g, i);
  const cplx rhs =
      std::polar(1.0, -kTwoPi * static_cast<double>(k) * f.fgrid().alpha(i)) * base;
  return std::abs(lhs - rhs);
}

double covariance_residual(const OperatorField& f, const OperatorField& g,
                           const GroupElement& x, const GroupElement& xp, int i) {
  const cplx lhs = bracket_at(left_translate(f, x), left_translate(g, xp), i);
  const cplx rhs = bracket_at(f, left_translate(g, compose(inverse(x), xp)), i);
  return std::abs(lhs - rhs);
}

}  // namespace heis
