// grid.cpp

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

#include "heis/grid.hpp"

#include <cmath>

namespace heis {

SpatialGrid::SpatialGrid(int d, Eigen::VectorXd lo, double h, int n_axis)
    : d_(d), lo_(std::move(lo)), h_(h), n_axis_(n_axis) {
  if (d_ < 1 || lo_.size() != d_) throw spec_error("grid: lo must have d entries");
  if (!(h_ > 0.0)) throw spec_error("grid: spacing h must be positive");
  if (n_axis_ < 2) throw spec_error("grid: need at least 2 nodes per axis");
  total_ = 1;
  for (int i = 0; i < d_; ++i) {
    total_ *= n_axis_;
    if (total_ > (1L << 26)) throw spec_error("grid: too many nodes");
  }
  cell_weight_ = std::pow(h_, d_);
}

void SpatialGrid::unflatten(long flat, int* idx) const {
  for (int axis = d_ - 1; axis >= 0; --axis) {
    idx[axis] = static_cast<int>(flat % n_axis_);
    flat /= n_axis_;
  }
}

Eigen::VectorXd SpatialGrid::node(long flat) const {
  Eigen::VectorXd x(d_);
  for (int axis = d_ - 1; axis >= 0; --axis) {
    x[axis] = axis_coord(axis, static_cast<int>(flat % n_axis_));
    flat /= n_axis_;
  }
  return x;
}

SpatialGridPtr make_grid(int d, Eigen::VectorXd lo, double h, int n_axis) {
  return std::make_shared<const SpatialGrid>(d, std::move(lo), h, n_axis);
}

SpatialGridPtr make_grid_1d(double lo, double hi, double h) {
  const double width = hi - lo;
  const int n = static_cast<int>(std::round(width / h));
  if (n < 2 || std::abs(n * h - width) > 1e-9 * std::max(1.0, width))
    throw spec_error("grid: [lo, hi) width must be a positive multiple of h");
  return make_grid(1, Eigen::VectorXd::Constant(1, lo), h, n);
}

double WindowVector::norm() const {
  return std::sqrt(grid->cell_weight()) * values.norm();
}

cplx wv_inner(const WindowVector& x, const WindowVector& y) {
  check_same_grid(x.grid, y.grid);
  return x.grid->cell_weight() * y.values.dot(x.values);  // dot conjugates y
}

void check_same_grid(const SpatialGridPtr& a, const SpatialGridPtr& b) {
  if (!a || !b) throw grid_error("missing spatial grid");
  if (a == b) return;
  if (!(*a == *b)) throw grid_error("spatial grid mismatch");
}

WindowSpec WindowSpec::box(double lo, double hi) {
  if (!(lo < hi)) throw spec_error("box window: need lo < hi");
  WindowSpec w;
  w.kind = Kind::kBox;
  w.box_lo = lo;
  w.box_hi = hi;
  return w;
}

WindowSpec WindowSpec::gauss(double sigma) {
  if (!(sigma > 0.0)) throw spec_error("gauss window: sigma must be positive");
  WindowSpec w;
  w.kind = Kind::kGauss;
  w.sigma = sigma;
  return w;
}

WindowSpec WindowSpec::from_samples(SpatialGridPtr grid, Eigen::VectorXcd values) {
  if (!grid || grid->dim() != 1) throw spec_error("sample windows support d = 1 only");
  if (values.size() != grid->total())
    throw spec_error("sample window: value count does not match grid");
  WindowSpec w;
  w.kind = Kind::kSamples;
  w.samples = std::move(values);
  w.samples_grid = std::move(grid);
  return w;
}

cplx window_value(const WindowSpec& w, double v) {
  switch (w.kind) {
    case WindowSpec::Kind::kBox:
      return (v >= w.box_lo && v < w.box_hi) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    case WindowSpec::Kind::kGauss: {
      const double s2 = w.sigma * w.sigma;
      return std::pow(M_PI * s2, -0.25) * std::exp(-v * v / (2.0 * s2));
    }
    case WindowSpec::Kind::kSamples: {
      const auto& g = *w.samples_grid;
      const long j = std::lround((v - g.lo()[0]) / g.h() - 0.5);
      if (j < 0 || j >= g.total()) return cplx(0.0, 0.0);
      return w.samples[j];
    }
  }
  return cplx(0.0, 0.0);
}

WindowVector sample_window(const WindowSpec& w, const SpatialGridPtr& grid) {
  if (w.kind == WindowSpec::Kind::kSamples && grid->dim() != 1)
    throw spec_error("sample windows support d = 1 only");
  WindowVector out;
  out.grid = grid;
  out.values.resize(grid->total());
  const int d = grid->dim();
  std::vector<int> idx(d);
  for (long flat = 0; flat < grid->total(); ++flat) {
    grid->unflatten(flat, idx.data());
    cplx v(1.0, 0.0);
    for (int axis = 0; axis < d; ++axis)
      v *= window_value(w, grid->axis_coord(axis, idx[axis]));
    out.values[flat] = v;
  }
  return out;
}

}  // namespace heis
