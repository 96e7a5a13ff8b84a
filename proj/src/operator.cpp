// operator.cpp

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

#include "heis/operator.hpp"

#include <cmath>
#include <vector>

namespace heis {

HSOperator HSOperator::dense(SpatialGridPtr grid, Eigen::MatrixXcd m) {
  if (!grid) throw grid_error("dense operator: missing grid");
  if (m.rows() != grid->total() || m.cols() != grid->total())
    throw grid_error("dense operator: matrix size does not match grid");
  HSOperator op;
  op.rank_one_ = false;
  op.grid_ = std::move(grid);
  op.matrix_ = std::move(m);
  return op;
}

HSOperator HSOperator::rank_one(WindowVector left, WindowVector right) {
  check_same_grid(left.grid, right.grid);
  HSOperator op;
  op.rank_one_ = true;
  op.grid_ = left.grid;
  op.left_ = std::move(left);
  op.right_ = std::move(right);
  return op;
}

const Eigen::MatrixXcd& HSOperator::matrix() const {
  if (rank_one_) throw spec_error("matrix() called on a rank-one operator");
  return matrix_;
}

const WindowVector& HSOperator::left() const {
  if (!rank_one_) throw spec_error("left() called on a dense operator");
  return left_;
}

const WindowVector& HSOperator::right() const {
  if (!rank_one_) throw spec_error("right() called on a dense operator");
  return right_;
}

Eigen::MatrixXcd HSOperator::densified() const {
  if (!rank_one_) return matrix_;
  return grid_->cell_weight() * (left_.values * right_.values.adjoint());
}

double HSOperator::hs_norm() const {
  if (rank_one_) return left_.norm() * right_.norm();
  return matrix_.norm();  // Frobenius
}

HSOperator HSOperator::scaled(cplx c) const {
  if (rank_one_) {
    WindowVector l = left_;
    l.values *= c;
    return rank_one(std::move(l), right_);
  }
  return dense(grid_, c * matrix_);
}

cplx hs_inner(const HSOperator& a, const HSOperator& b) {
  check_same_grid(a.grid(), b.grid());
  if (a.is_rank_one() && b.is_rank_one()) {
    // <a1 (x) a2, b1 (x) b2> = <a1, b1> <b2, a2>
    return wv_inner(a.left(), b.left()) * wv_inner(b.right(), a.right());
  }
  if (a.is_rank_one()) {
    // trace(h^d a1 a2^+ B^+) = <a1, B a2>
    WindowVector ba{b.grid(), b.matrix() * a.right().values};
    return wv_inner(a.left(), ba);
  }
  if (b.is_rank_one()) {
    // trace(A h^d b2 b1^+) = <A b2, b1>
    WindowVector ab{a.grid(), a.matrix() * b.right().values};
    return wv_inner(ab, b.left());
  }
  return (a.matrix().array() * b.matrix().array().conjugate()).sum();
}

namespace {

// Per-axis node shift for a translation p, validated against the grid.
std::vector<long> node_shift(const SpatialGrid& g, const Eigen::VectorXd& p) {
  if (p.size() != g.dim()) throw spec_error("translation dimension mismatch");
  std::vector<long> s(g.dim());
  for (int axis = 0; axis < g.dim(); ++axis) {
    const double steps = p[axis] / g.h();
    const double r = std::round(steps);
    if (std::abs(steps - r) > 1e-12 * std::max(1.0, std::abs(steps)))
      throw grid_error("translation is off the grid lattice");
    s[axis] = static_cast<long>(r);
  }
  return s;
}

}  // namespace

WindowVector schrodinger_apply(double lambda, const GroupElement& x,
                               const WindowVector& f) {
  if (lambda == 0.0) throw spec_error("schrodinger_apply: lambda must be nonzero");
  const SpatialGrid& g = *f.grid;
  if (x.dim() != g.dim()) throw spec_error("group element dimension mismatch");
  const std::vector<long> shift = node_shift(g, x.p);

  WindowVector out;
  out.grid = f.grid;
  out.values.setZero(g.total());

  const int d = g.dim();
  std::vector<int> idx(d);
  for (long flat = 0; flat < g.total(); ++flat) {
    g.unflatten(flat, idx.data());
    long src = 0;
    bool in_range = true;
    double qdot = 0.0;
    for (int axis = 0; axis < d; ++axis) {
      const long k = idx[axis] - shift[axis];
      if (k < 0 || k >= g.n_axis()) {
        in_range = false;
        break;
      }
      src = src * g.n_axis() + k;
      qdot += x.q[axis] * g.axis_coord(axis, idx[axis]);
    }
    if (!in_range) continue;
    const double phase = kTwoPi * lambda * (x.t - qdot);
    out.values[flat] = std::polar(1.0, phase) * f.values[src];
  }
  return out;
}

HSOperator conjugate_rankone(double lambda, const GroupElement& x,
                             const HSOperator& p) {
  if (!p.is_rank_one())
    throw spec_error("conjugate_rankone: operator is not rank-one");
  return HSOperator::rank_one(schrodinger_apply(lambda, x, p.left()), p.right());
}

HSOperator left_action(double lambda, const GroupElement& x, const HSOperator& p,
                       bool* dense_fallback) {
  if (p.is_rank_one()) return conjugate_rankone(lambda, x, p);
  if (dense_fallback) *dense_fallback = true;

  if (lambda == 0.0) throw spec_error("left_action: lambda must be nonzero");
  const SpatialGrid& g = *p.grid();
  if (x.dim() != g.dim()) throw spec_error("group element dimension mismatch");
  const std::vector<long> shift = node_shift(g, x.p);

  // Row k of Pi.M is phase(k) times row (k - shift) of M.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(g.total(), g.total());
  const int d = g.dim();
  std::vector<int> idx(d);
  for (long flat = 0; flat < g.total(); ++flat) {
    g.unflatten(flat, idx.data());
    long src = 0;
    bool in_range = true;
    double qdot = 0.0;
    for (int axis = 0; axis < d; ++axis) {
      const long k = idx[axis] - shift[axis];
      if (k < 0 || k >= g.n_axis()) {
        in_range = false;
        break;
      }
      src = src * g.n_axis() + k;
      qdot += x.q[axis] * g.axis_coord(axis, idx[axis]);
    }
    if (!in_range) continue;
    const double phase = kTwoPi * lambda * (x.t - qdot);
    out.row(flat) = std::polar(1.0, phase) * p.matrix().row(src);
  }
  return HSOperator::dense(p.grid(), std::move(out));
}

}  // namespace heis
