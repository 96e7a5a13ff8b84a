// field.cpp

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

#include "heis/field.hpp"

#include <cmath>
#include <vector>

namespace heis {

void FrequencyGrid::validate() const {
  if (alpha_res < 1) throw spec_error("frequency grid: alpha_res must be >= 1");
  if (band_lo > band_hi) throw spec_error("frequency grid: band_lo > band_hi");
  if (weight_dim < 0) throw spec_error("frequency grid: weight_dim must be >= 0");
}

OperatorField::OperatorField(FrequencyGrid fgrid, SpatialGridPtr grid)
    : fgrid_(std::move(fgrid)), grid_(std::move(grid)) {
  fgrid_.validate();
  if (!grid_) throw grid_error("operator field: missing spatial grid");
}

void OperatorField::set_entry(int i, int j, HSOperator op) {
  if (i < 0 || i >= fgrid_.alpha_res)
    throw spec_error("field entry: alpha index out of range");
  if (j < fgrid_.band_lo || j > fgrid_.band_hi)
    throw spec_error("field entry: band index out of range");
  check_same_grid(grid_, op.grid());
  entries_.insert_or_assign({i, j}, std::move(op));
}

const HSOperator* OperatorField::entry(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? nullptr : &it->second;
}

double OperatorField::weighted_norm_squared() const {
  double total = 0.0;
  for (const auto& [key, op] : entries_) {
    const double ns = op.hs_norm();
    total += fgrid_.rho(fgrid_.lambda(key.first, key.second)) * ns * ns;
  }
  return total / fgrid_.alpha_res;
}

double OperatorField::weighted_norm() const {
  return std::sqrt(weighted_norm_squared());
}

void check_same_field_grids(const OperatorField& f, const OperatorField& g) {
  if (!f.fgrid().same_as(g.fgrid())) throw grid_error("frequency grid mismatch");
  check_same_grid(f.grid(), g.grid());
}

cplx plancherel_inner(const OperatorField& f, const OperatorField& g) {
  check_same_field_grids(f, g);
  cplx total(0.0, 0.0);
  // std::map iteration is ascending (i, j); only keys present on both sides
  // contribute.
  for (const auto& [key, fop] : f.entries()) {
    const HSOperator* gop = g.entry(key.first, key.second);
    if (!gop) continue;
    total += hs_inner(fop, *gop) *
             f.fgrid().rho(f.fgrid().lambda(key.first, key.second));
  }
  return total / static_cast<double>(f.fgrid().alpha_res);
}

OperatorField left_translate(const OperatorField& f, const GroupElement& x) {
  OperatorField out(f.fgrid(), f.grid());
  int fallbacks = 0;
  for (const auto& [key, op] : f.entries()) {
    const double lam = f.fgrid().lambda(key.first, key.second);
    bool dense = false;
    HSOperator moved = left_action(lam, x, op, &dense);
    if (dense) ++fallbacks;
    const double before = op.hs_norm();
    const double after = moved.hs_norm();
    if (std::abs(after - before) > 1e-10 * std::max(1.0, before))
      throw grid_error("left_translate: translated support leaks past the grid domain");
    out.set_entry(key.first, key.second, std::move(moved));
  }
  out.note_dense_fallbacks(fallbacks);
  return out;
}

OperatorField combine_central_translates(const OperatorField& f,
                                         const std::map<long long, cplx>& coeffs) {
  OperatorField out(f.fgrid(), f.grid());
  for (const auto& [key, op] : f.entries()) {
    const double lam = f.fgrid().lambda(key.first, key.second);
    cplx m(0.0, 0.0);
    for (const auto& [k, c] : coeffs)
      m += c * std::polar(1.0, kTwoPi * lam * static_cast<double>(k));
    out.set_entry(key.first, key.second, op.scaled(m));
  }
  return out;
}

OperatorField field_add(const OperatorField& f, const OperatorField& g) {
  check_same_field_grids(f, g);
  OperatorField out(f.fgrid(), f.grid());
  for (const auto& [key, fop] : f.entries()) {
    const HSOperator* gop = g.entry(key.first, key.second);
    if (!gop) {
      out.set_entry(key.first, key.second, fop);
    } else {
      out.set_entry(key.first, key.second,
                    HSOperator::dense(f.grid(), fop.densified() + gop->densified()));
    }
  }
  for (const auto& [key, gop] : g.entries()) {
    if (!f.entry(key.first, key.second)) out.set_entry(key.first, key.second, gop);
  }
  return out;
}

OperatorField field_scale(const OperatorField& f, cplx c) {
  OperatorField out(f.fgrid(), f.grid());
  for (const auto& [key, op] : f.entries())
    out.set_entry(key.first, key.second, op.scaled(c));
  return out;
}

}  // namespace heis
