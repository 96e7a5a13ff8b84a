// grid.hpp
//
// Discretization of L^2(R^d): a uniform tensor grid with midpoint-rule
// quadrature (nodes at cell centers, weight h^d per node) and complex
// window vectors living on it.

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

#include <memory>
#include <vector>

#include <Eigen/Core>

#include "heis/common.hpp"

namespace heis {

class SpatialGrid {
 public:
  // lo is the lower corner of the domain [lo, lo + n_axis*h)^d; node
  // coordinates are lo[axis] + (k + 1/2) h.
  SpatialGrid(int d, Eigen::VectorXd lo, double h, int n_axis);

  int dim() const { return d_; }
  const Eigen::VectorXd& lo() const { return lo_; }
  double h() const { return h_; }
  int n_axis() const { return n_axis_; }
  long total() const { return total_; }
  double cell_weight() const { return cell_weight_; }  // h^d

  double axis_coord(int axis, int k) const { return lo_[axis] + (k + 0.5) * h_; }
  // Multi-index of a flat index, row-major with axis 0 slowest.
  void unflatten(long flat, int* idx) const;
  Eigen::VectorXd node(long flat) const;

  bool operator==(const SpatialGrid& o) const {
    return d_ == o.d_ && n_axis_ == o.n_axis_ && h_ == o.h_ && lo_ == o.lo_;
  }

 private:
  int d_;
  Eigen::VectorXd lo_;
  double h_;
  int n_axis_;
  long total_;
  double cell_weight_;
};

using SpatialGridPtr = std::shared_ptr<const SpatialGrid>;

SpatialGridPtr make_grid(int d, Eigen::VectorXd lo, double h, int n_axis);
// 1-d convenience covering [lo, hi) (hi - lo must be a multiple of h).
SpatialGridPtr make_grid_1d(double lo, double hi, double h);

struct WindowVector {
  SpatialGridPtr grid;
  Eigen::VectorXcd values;

  double norm() const;  // sqrt(h^d sum |v|^2)
};

// Quadrature inner product <x, y> = h^d sum x_k conj(y_k); grids must match.
cplx wv_inner(const WindowVector& x, const WindowVector& y);

void check_same_grid(const SpatialGridPtr& a, const SpatialGridPtr& b);

// Closed-form window descriptions. Box windows sample the half-open
// indicator [a, b) per axis; gauss is the unit-norm Gaussian with width
// sigma per axis; samples is a raw value vector (d = 1 only), scaled by
// nearest-node lookup.
struct WindowSpec {
  enum class Kind { kBox, kGauss, kSamples };
  Kind kind = Kind::kBox;
  double box_lo = 0.0, box_hi = 1.0;
  double sigma = 1.0;
  Eigen::VectorXcd samples;
  SpatialGridPtr samples_grid;  // grid the raw samples were taken on

  static WindowSpec box(double lo, double hi);
  static WindowSpec gauss(double sigma);
  static WindowSpec from_samples(SpatialGridPtr grid, Eigen::VectorXcd values);
};

// Single-axis evaluation u(v); sample windows use nearest-node lookup.
cplx window_value(const WindowSpec& w, double v);

// Samples u(x) at the grid nodes (the lambda = 1 case of scale_window).
WindowVector sample_window(const WindowSpec& w, const SpatialGridPtr& grid);

}  // namespace heis
