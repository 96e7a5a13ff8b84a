// operator.hpp
//
// Hilbert-Schmidt operators on the discretized L^2(R^d): dense N x N
// matrices or rank-one dyads left (x) right : f -> <f, right> left, and the
// unitary Schroedinger action
//   Pi_lambda(p,q,t) f(y) = e^{2 pi i lambda t} e^{-2 pi i lambda q.y} f(y-p).
//
// Trace convention: hs_inner(A, B) = trace(A B^dagger) on the plain matrices,
// with the h^d quadrature weight folded into the dyad (its matrix is
// h^d * left * right^dagger), so ||u (x) u||_HS = ||u||^2 and rank-one inner
// products reduce to <a,c><d,b> in the weighted vector inner product.

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

#include "heis/common.hpp"
#include "heis/grid.hpp"
#include "heis/group.hpp"

namespace heis {

class HSOperator {
 public:
  static HSOperator dense(SpatialGridPtr grid, Eigen::MatrixXcd m);
  static HSOperator rank_one(WindowVector left, WindowVector right);

  bool is_rank_one() const { return rank_one_; }
  const SpatialGridPtr& grid() const { return grid_; }
  const Eigen::MatrixXcd& matrix() const;     // dense only
  const WindowVector& left() const;           // rank-one only
  const WindowVector& right() const;          // rank-one only

  Eigen::MatrixXcd densified() const;         // h^d left right^dagger for dyads
  double hs_norm() const;
  HSOperator scaled(cplx c) const;

 private:
  HSOperator() = default;
  bool rank_one_ = false;
  SpatialGridPtr grid_;
  Eigen::MatrixXcd matrix_;
  WindowVector left_, right_;
};

// trace(A B^dagger) under the convention above; conjugate-symmetric.
// Throws grid_error on grid mismatch.
cplx hs_inner(const HSOperator& a, const HSOperator& b);

// Pi_lambda(x) f on the grid. Translations must land on the node lattice
// (each p component within 1e-12 of a multiple of h); values shifted past
// the domain are dropped and vacated nodes are zero (zero-padding policy).
// Throws spec_error for lambda = 0, grid_error for off-grid translations.
WindowVector schrodinger_apply(double lambda, const GroupElement& x,
                               const WindowVector& f);

// (Pi_lambda(x) left) (x) right; requires a rank-one operator.
HSOperator conjugate_rankone(double lambda, const GroupElement& x, const HSOperator& p);

// Left action Pi_lambda(x) . P for either representation; rank-one inputs
// stay rank-one via conjugate_rankone, dense inputs fall back to a dense
// product and set *dense_fallback when given.
HSOperator left_action(double lambda, const GroupElement& x, const HSOperator& p,
                       bool* dense_fallback = nullptr);

}  // namespace heis
