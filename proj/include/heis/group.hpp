// group.hpp
//
// Exact arithmetic of the polarized Heisenberg group H^d = R^d x R^d x R
// with product (p,q,t)(p',q',t') = (p+p', q+q', t+t'+p.q'), and of its
// lattice subgroups Gamma = A Z^d x B Z^d x Z.

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

struct GroupElement {
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  double t = 0.0;

  int dim() const { return static_cast<int>(p.size()); }

  static GroupElement identity(int d) {
    return GroupElement{Eigen::VectorXd::Zero(d), Eigen::VectorXd::Zero(d), 0.0};
  }
  // (p, q, t) with d = 1 convenience.
  static GroupElement scalar(double p, double q, double t) {
    GroupElement g;
    g.p = Eigen::VectorXd::Constant(1, p);
    g.q = Eigen::VectorXd::Constant(1, q);
    g.t = t;
    return g;
  }
};

// Polarized product; throws spec_error on dimension mismatch.
GroupElement compose(const GroupElement& x, const GroupElement& y);

// (p,q,t)^{-1} = (-p, -q, -t + p.q).
GroupElement inverse(const GroupElement& x);

// Lattice Gamma = A Z^d x B Z^d x Z.  A, B must be invertible and the
// pairing (An).(Bm) must take integer values on integer vectors, which is
// equivalent to A^T B having integer entries; the spec-level invariant
// A B^T in Z^{dxd} is validated as well (both to 1e-12 against the nearest
// integer, failure is a constructor error).
class LatticeSpec {
 public:
  LatticeSpec(Eigen::MatrixXd a, Eigen::MatrixXd b);

  int dim() const { return static_cast<int>(a_.rows()); }
  const Eigen::MatrixXd& a() const { return a_; }
  const Eigen::MatrixXd& b() const { return b_; }
  // Integer matrix A^T B, the pairing that makes the central corrections of
  // lattice products exact.
  const Eigen::MatrixXi& pairing() const { return pairing_; }

 private:
  Eigen::MatrixXd a_, b_;
  Eigen::MatrixXi pairing_;
};

using LatticeSpecPtr = std::shared_ptr<const LatticeSpec>;

// gamma = (An, Bm, k); decomposes as gamma1 * gamma2 with gamma1 = (An,Bm,0)
// and gamma2 = (0,0,k). Indices are exact integers so the decomposition and
// lattice products never round.
struct LatticePoint {
  Eigen::VectorXi n;
  Eigen::VectorXi m;
  long long k = 0;
  LatticeSpecPtr spec;

  bool is_zero() const { return n.isZero() && m.isZero() && k == 0; }
  bool gamma1_is_zero() const { return n.isZero() && m.isZero(); }

  static LatticePoint zero(const LatticeSpecPtr& spec);
};

GroupElement embed(const LatticePoint& g);

// Exact product / inverse in lattice coordinates:
//   (n,m,k)(n',m',k') = (n+n', m+m', k + k' + n^T (A^T B) m')
//   (n,m,k)^{-1}      = (-n, -m, -k + n^T (A^T B) m)
LatticePoint lattice_compose(const LatticePoint& x, const LatticePoint& y);
LatticePoint lattice_inverse(const LatticePoint& x);

LatticePoint gamma1_part(const LatticePoint& g);  // (n, m, 0)
LatticePoint gamma2_part(const LatticePoint& g);  // (0, 0, k)

// All points with max-norm of (n,m) <= r1 and |k| <= r2, ordered
// lexicographically on (n_1..n_d, m_1..m_d, k).
std::vector<LatticePoint> lattice_ball(const LatticeSpecPtr& spec, int r1, int r2);

}  // namespace heis
