// gabor.hpp
//
// Bandlimited rank-one generators: scaled windows u_lambda(x) =
// |lambda|^{d/2} u(lambda x), projector fields H_eps(lambda) = u_lambda (x)
// u_lambda on eps < lambda <= 1 (band {0}, zero elsewhere), and the frame
// certification pipeline whose orthonormality hypothesis is verified
// numerically, never assumed.

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

#include "heis/analysis.hpp"
#include "heis/field.hpp"

namespace heis {

struct GaborConstruction {
  WindowSpec window;
  double epsilon = 0.25;
  FrequencyGrid fgrid;  // band {0}
  SpatialGridPtr grid;
  LatticeSpecPtr lattice;

  // d = 1 construction with the default domain sizing: the grid covers every
  // Pi_alpha(gamma_1) translate for |n| <= margin_r1 lattice steps, box
  // windows via [-(margin_r1*a + 1), 1/eps + margin_r1*a + 1) and Gaussians
  // with +-8 sigma/eps tails. h must divide a. The input window must have
  // unit norm on the grid to 1e-10.
  static GaborConstruction create(const WindowSpec& window, double epsilon,
                                  double a, double b, int alpha_res, double h,
                                  int margin_r1);
};

// u_lambda sampled at grid nodes (closed-form kinds evaluated exactly,
// sample windows by nearest node). Throws grid_error if the scaled support
// does not fit the domain.
WindowVector scale_window(const WindowSpec& w, const SpatialGridPtr& grid,
                          double lambda);

// H_eps as an operator field: rank-one entries at midpoints eps < alpha <= 1.
OperatorField band_field(const GaborConstruction& c);

// max_alpha |[H_eps, H_eps](alpha) - alpha^d 1(eps < alpha <= 1)|; the budget
// is dominated by the window-norm quadrature error.
double auto_bracket_deviation(const GaborConstruction& c, const OperatorField& field);

struct CrossBracketValue {
  cplx via_bracket;   // bracket(left_translate(H_eps, gamma_1), H_eps, i)
  cplx via_overlap;   // rho(alpha_i) <Pi(gamma_1) u_alpha, u_alpha> ||u_alpha||^2
  double difference = 0.0;
};

// Both routes to [L_{gamma_1} psi_eps, psi_eps](alpha_i); gamma_1 must be
// central-free (k = 0). The overlap route is the rank-one identity
// <(Pi u) (x) u, u (x) u> = <Pi u, u><u, u> with the Plancherel weight.
CrossBracketValue cross_bracket(const GaborConstruction& c, const OperatorField& field,
                                const LatticePoint& gamma1, int i);

// band_field -> check_condition (the orthonormality hypothesis, at tol) ->
// frame_certify. Hypothesis failures surface as INCONCLUSIVE with the
// offending (gamma_1, alpha, value) attached.
CertReport build_frame_example(const GaborConstruction& c, int r1, double tol);

// Full-band normalized fixture: entries rho(alpha)^{-1/2} u (x) u with u a
// grid-normalized block of width a, on the lattice (a, b). Requires
// a*b = 0 (mod 2M) and a/h integer, which makes every cross bracket an exact
// grid zero, so [psi, L_{gamma_1} psi] = delta_{gamma_1,0} to machine
// precision; bracket(psi, psi) = 1 at every midpoint.
struct FixtureResult {
  OperatorField field;
  LatticeSpecPtr lattice;
};
FixtureResult orthonormal_fixture(int alpha_res, double h, int a, int b,
                                  int margin_r1);

}  // namespace heis
