// json_io.hpp
//
// Config schema, report serialization, and the deterministic CSV emitters
// shared by the CLI and the tests. All float formatting is fixed-form
// (%.17g) so identical configs produce byte-identical artifacts.

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

#include <optional>
#include <string>

#include <json.hpp>

#include "heis/analysis.hpp"
#include "heis/gabor.hpp"

namespace heis {

using json = nlohmann::json;

WindowSpec window_from_json(const json& j);
json window_to_json(const WindowSpec& w);

// {"d": ..., "A": [[...]], "B": [[...]]}
LatticeSpecPtr lattice_from_json(const json& j);
json lattice_to_json(const LatticeSpec& s);

struct BuiltField {
  OperatorField field;
  LatticeSpecPtr lattice;
  std::optional<GaborConstruction> construction;
};

// Builds the field described by config["field"]:
//   kind "gabor_bandlimited": window, epsilon, alpha_res, a, b, h
//   kind "orthonormal_fixture": alpha_res, h, a, b
//   kind "zero": alpha_res, band, grid {d, lo, h, n_axis}
// margin_r1 sets the domain headroom in lattice steps; alpha_res/band
// overrides come pre-applied by the caller. config["lattice"] overrides the
// lattice derived from (a, b).
BuiltField build_field(const json& config, int margin_r1);

json report_to_json(const CertReport& r, const std::string& config_hash);

std::string format_double(double v);
std::string format_complex(cplx v);

// FNV-1a over the canonical dump of the effective config.
std::string config_hash(const json& effective_config);

// # header block (version, config hash, grid parameters) + alpha,re,im rows.
std::string profile_csv(const BracketProfile& prof, const OperatorField& field,
                        const std::string& hash);

// Gram matrix with g(n;m;k) lattice-index headers.
std::string gram_csv(const std::vector<LatticePoint>& ball, const Eigen::MatrixXcd& m,
                     const OperatorField& field, const std::string& hash);

}  // namespace heis
