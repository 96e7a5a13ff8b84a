// group.cpp

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

#include "heis/group.hpp"

#include <cmath>

#include <Eigen/LU>

namespace heis {

namespace {

constexpr double kIntTol = 1e-12;

// Rounds a real matrix to integers, throwing if any entry is farther than
// kIntTol from the nearest integer.
Eigen::MatrixXi round_to_integers(const Eigen::MatrixXd& m, const char* what) {
  Eigen::MatrixXi out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double r = std::round(m(i, j));
      if (std::abs(m(i, j) - r) > kIntTol) {
        throw spec_error(std::string(what) + " must have integer entries; entry (" +
                         std::to_string(i) + "," + std::to_string(j) + ") = " +
                         std::to_string(m(i, j)));
      }
      out(i, j) = static_cast<int>(r);
    }
  }
  return out;
}

void check_same_spec(const LatticePoint& x, const LatticePoint& y) {
  if (!x.spec || !y.spec) throw spec_error("lattice point without a spec");
  if (x.spec != y.spec && x.spec->dim() != y.spec->dim())
    throw spec_error("lattice points from incompatible specs");
}

}  // namespace

GroupElement compose(const GroupElement& x, const GroupElement& y) {
  if (x.dim() != y.dim() || x.q.size() != x.p.size() || y.q.size() != y.p.size())
    throw spec_error("group elements of mismatched dimension");
  GroupElement out;
  out.p = x.p + y.p;
  out.q = x.q + y.q;
  out.t = x.t + y.t + x.p.dot(y.q);
  return out;
}

GroupElement inverse(const GroupElement& x) {
  GroupElement out;
  out.p = -x.p;
  out.q = -x.q;
  out.t = -x.t + x.p.dot(x.q);
  return out;
}

LatticeSpec::LatticeSpec(Eigen::MatrixXd a, Eigen::MatrixXd b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != a_.cols() || b_.rows() != b_.cols() || a_.rows() != b_.rows() ||
      a_.rows() < 1)
    throw spec_error("lattice matrices must be square and of equal dimension");
  const double scale_a = a_.cwiseAbs().maxCoeff();
  const double scale_b = b_.cwiseAbs().maxCoeff();
  Eigen::FullPivLU<Eigen::MatrixXd> lu_a(a_), lu_b(b_);
  if (scale_a == 0.0 || scale_b == 0.0 || !lu_a.isInvertible() || !lu_b.isInvertible())
    throw spec_error("lattice matrices must be invertible");
  round_to_integers(a_ * b_.transpose(), "A*B^T");
  pairing_ = round_to_integers(a_.transpose() * b_, "A^T*B");
}

LatticePoint LatticePoint::zero(const LatticeSpecPtr& spec) {
  LatticePoint g;
  g.n = Eigen::VectorXi::Zero(spec->dim());
  g.m = Eigen::VectorXi::Zero(spec->dim());
  g.k = 0;
  g.spec = spec;
  return g;
}

GroupElement embed(const LatticePoint& g) {
  if (!g.spec) throw spec_error("lattice point without a spec");
  GroupElement out;
  out.p = g.spec->a() * g.n.cast<double>();
  out.q = g.spec->b() * g.m.cast<double>();
  out.t = static_cast<double>(g.k);
  return out;
}

LatticePoint lattice_compose(const LatticePoint& x, const LatticePoint& y) {
  check_same_spec(x, y);
  LatticePoint out;
  out.n = x.n + y.n;
  out.m = x.m + y.m;
  const long long central =
      x.n.cast<long long>().dot((x.spec->pairing() * y.m).cast<long long>());
  out.k = x.k + y.k + central;
  out.spec = x.spec;
  return out;
}

LatticePoint lattice_inverse(const LatticePoint& x) {
  if (!x.spec) throw spec_error("lattice point without a spec");
  LatticePoint out;
  out.n = -x.n;
  out.m = -x.m;
  const long long central =
      x.n.cast<long long>().dot((x.spec->pairing() * x.m).cast<long long>());
  out.k = -x.k + central;
  out.spec = x.spec;
  return out;
}

LatticePoint gamma1_part(const LatticePoint& g) {
  LatticePoint out = g;
  out.k = 0;
  return out;
}

LatticePoint gamma2_part(const LatticePoint& g) {
  LatticePoint out = LatticePoint::zero(g.spec);
  out.k = g.k;
  return out;
}

std::vector<LatticePoint> lattice_ball(const LatticeSpecPtr& spec, int r1, int r2) {
  if (!spec) throw spec_error("lattice_ball: null spec");
  if (r1 < 0 || r2 < 0) throw spec_error("lattice_ball: radii must be >= 0");
  const int d = spec->dim();
  const long per_axis = 2L * r1 + 1;
  long count_nm = 1;
  for (int i = 0; i < 2 * d; ++i) count_nm *= per_axis;

  std::vector<LatticePoint> out;
  out.reserve(static_cast<size_t>(count_nm * (2L * r2 + 1)));
  Eigen::VectorXi nm = Eigen::VectorXi::Constant(2 * d, -r1);
  for (long idx = 0; idx < count_nm; ++idx) {
    LatticePoint g;
    g.n = nm.head(d);
    g.m = nm.tail(d);
    g.spec = spec;
    for (int k = -r2; k <= r2; ++k) {
      g.k = k;
      out.push_back(g);
    }
    // lexicographic increment, last coordinate fastest
    for (int axis = 2 * d - 1; axis >= 0; --axis) {
      if (nm[axis] < r1) {
        ++nm[axis];
        break;
      }
      nm[axis] = -r1;
    }
  }
  return out;
}

}  // namespace heis
