// field.hpp
//
// Operator-valued fields lambda -> F(lambda) on the frequency grid
// lambda = alpha_i + j, alpha_i = (i + 1/2)/M, with the Plancherel weight
// rho(lambda) (default |lambda|^d) and the left-translation action
// F(lambda) -> Pi_lambda(x) F(lambda).
//
// Every function of L^2(H^d) handled by this library is represented by its
// field alone; inner products are the discretized Plancherel formula
//   <F, G> = (1/M) sum_{i,j} <F(lambda), G(lambda)>_HS rho(lambda)
// with a fixed reduction order (ascending i, then j) for bit reproducibility.

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
#include <string>
#include <utility>

#include "heis/common.hpp"
#include "heis/operator.hpp"

namespace heis {

struct FrequencyGrid {
  int alpha_res = 1;            // M: midpoints alpha_i = (i+1/2)/M cover (0,1)
  int band_lo = 0, band_hi = 0; // j ranges over [band_lo, band_hi]
  int weight_dim = 1;           // rho(lambda) = |lambda|^weight_dim ...
  std::function<double(double)> custom_weight;  // ... unless overridden
  std::string weight_name = "plancherel";

  FrequencyGrid() = default;
  FrequencyGrid(int m, int jlo, int jhi, int d)
      : alpha_res(m), band_lo(jlo), band_hi(jhi), weight_dim(d) {
    validate();
  }
  void validate() const;

  double alpha(int i) const { return (i + 0.5) / alpha_res; }
  double lambda(int i, int j) const { return alpha(i) + j; }
  double rho(double lam) const {
    return custom_weight ? custom_weight(lam)
                         : std::pow(std::abs(lam), weight_dim);
  }
  bool same_as(const FrequencyGrid& o) const {
    return alpha_res == o.alpha_res && band_lo == o.band_lo &&
           band_hi == o.band_hi && weight_dim == o.weight_dim &&
           weight_name == o.weight_name;
  }
};

class OperatorField {
 public:
  OperatorField(FrequencyGrid fgrid, SpatialGridPtr grid);

  const FrequencyGrid& fgrid() const { return fgrid_; }
  const SpatialGridPtr& grid() const { return grid_; }

  // Absent entries are the zero operator.
  void set_entry(int i, int j, HSOperator op);
  const HSOperator* entry(int i, int j) const;
  const std::map<std::pair<int, int>, HSOperator>& entries() const {
    return entries_;
  }

  // (1/M) sum rho(lambda) ||F(lambda)||_HS^2.
  double weighted_norm_squared() const;
  double weighted_norm() const;

  // Count of entries that lost rank-one form in a left_translate.
  int dense_fallbacks() const { return dense_fallbacks_; }
  void note_dense_fallbacks(int n) { dense_fallbacks_ = n; }

 private:
  FrequencyGrid fgrid_;
  SpatialGridPtr grid_;
  std::map<std::pair<int, int>, HSOperator> entries_;
  int dense_fallbacks_ = 0;
};

void check_same_field_grids(const OperatorField& f, const OperatorField& g);

// Discretized Plancherel pairing; conjugate-symmetric, positive on F = G != 0.
cplx plancherel_inner(const OperatorField& f, const OperatorField& g);

// Entrywise F(lambda) -> Pi_lambda(x) F(lambda). Rank-one entries stay
// rank-one. Throws grid_error if the zero-padding policy would truncate an
// entry (norm loss beyond 1e-10 relative).
OperatorField left_translate(const OperatorField& f, const GroupElement& x);

// The field of sum_k c_k L_{(0,0,k)} psi: every entry is scaled by the
// trigonometric polynomial m(lambda) = sum_k c_k e^{2 pi i lambda k},
// preserving rank-one form.
OperatorField combine_central_translates(const OperatorField& f,
                                         const std::map<long long, cplx>& coeffs);

// Pointwise field algebra; overlapping entries densify. Meant for test
// oracles, not hot paths.
OperatorField field_add(const OperatorField& f, const OperatorField& g);
OperatorField field_scale(const OperatorField& f, cplx c);

}  // namespace heis
