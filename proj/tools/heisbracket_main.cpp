// heisbracket_main.cpp
//
// Command-line front end: builds operator fields from a JSON config, then
// computes bracket profiles, runs the ONB / Riesz / frame certifiers, emits
// Gram-matrix pairs, or runs the seeded property suites.
//
// Exit codes: certify maps the verdict (0 CERTIFIED, 1 REFUTED,
// 2 INCONCLUSIVE); all commands use 3 for malformed specs / I/O, 4 for grid
// incompatibilities, 5 for internal errors.

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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heis/checks.hpp"
#include "heis/json_io.hpp"

namespace {

using heis::json;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  int alpha_res = 0;              // 0 = keep config value
  std::vector<int> band;          // empty = keep config value
  int r1 = 1;
  int r2 = 2;
  bool r1_given = false, r2_given = false;
  double tol = 1e-8;
  double tau = 0.0;               // 0 = relative default
  std::uint64_t seed = 1;
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw heis::spec_error("cannot open config file: " + path);
  json config;
  try {
    in >> config;
  } catch (const json::exception& e) {
    throw heis::spec_error(std::string("malformed config JSON: ") + e.what());
  }
  return config;
}

// Applies CLI overrides and returns the effective config used for hashing.
// The field spec may carry its own gamma1_radius / gamma2_radius defaults;
// explicit --r1 / --r2 win.
json effective_config(CommonOpts& opts, json config, const std::string& command,
                      const std::string& mode) {
  if (opts.alpha_res > 0) config["field"]["alpha_res"] = opts.alpha_res;
  if (!opts.band.empty()) {
    if (opts.band.size() != 2) throw heis::spec_error("--band needs two integers");
    config["field"]["band"] = {opts.band[0], opts.band[1]};
  }
  if (config.contains("field") && config["field"].contains("alpha_res")) {
    const long m = config["field"]["alpha_res"].get<long>();
    if (m < 1 || (m & (m - 1)) != 0)
      throw heis::spec_error("alpha_res must be a power of two");
  }
  if (!opts.r1_given && config.contains("field") &&
      config["field"].contains("gamma1_radius"))
    opts.r1 = config["field"]["gamma1_radius"].get<int>();
  if (!opts.r2_given && config.contains("field") &&
      config["field"].contains("gamma2_radius"))
    opts.r2 = config["field"]["gamma2_radius"].get<int>();
  if (opts.r1 < 0 || opts.r2 < 0) throw heis::spec_error("radii must be >= 0");
  if (!(opts.tol > 0.0)) throw heis::spec_error("--tol must be positive");
  if (opts.tau < 0.0) throw heis::spec_error("--tau must be positive when given");
  config["run"] = {{"command", command}, {"mode", mode},    {"r1", opts.r1},
                   {"r2", opts.r2},      {"tol", opts.tol}, {"tau", opts.tau},
                   {"seed", opts.seed}};
  return config;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw heis::spec_error("cannot open output file: " + path);
  out << content;
}

double resolve_tau(const CommonOpts& opts, const heis::OperatorField& field) {
  if (opts.tau > 0.0) return opts.tau;
  return heis::default_tau(heis::bracket_profile(field, field));
}

int run_profile(CommonOpts& opts) {
  json config = effective_config(opts, load_config(opts.config_path), "profile", "");
  const std::string hash = heis::config_hash(config);
  heis::BuiltField built = heis::build_field(config, std::max(1, opts.r1));
  const heis::BracketProfile prof = heis::bracket_profile(built.field, built.field);
  const std::string csv = heis::profile_csv(prof, built.field, hash);
  if (opts.out_path.empty())
    std::cout << csv;
  else
    write_file(opts.out_path, csv);
  return 0;
}

int run_certify(CommonOpts& opts, const std::string& mode) {
  json config = effective_config(opts, load_config(opts.config_path), "certify", mode);
  const std::string hash = heis::config_hash(config);
  heis::BuiltField built = heis::build_field(config, std::max(1, opts.r1));
  const double tau = resolve_tau(opts, built.field);

  heis::CertReport report;
  if (mode == "onb") {
    report = heis::check_onb(built.field, built.lattice, opts.r1, opts.r2, tau, opts.tol);
  } else if (mode == "riesz") {
    report = heis::riesz_certify(built.field, built.lattice, opts.r1, tau, opts.tol);
  } else if (mode == "frame") {
    report = heis::frame_certify(built.field, built.lattice, opts.r1, tau, opts.tol);
  } else {
    throw heis::spec_error("--mode must be one of onb, riesz, frame");
  }

  json out = heis::report_to_json(report, hash);
  if (mode == "frame" && report.verdict == heis::Verdict::kCertified && opts.r2 >= 0) {
    const heis::EigSummary probe =
        heis::finite_frame_probe(built.field, built.lattice, opts.r1, opts.r2);
    out["probe"] = {{"min_eig", probe.min_eig},
                    {"max_eig", probe.max_eig},
                    {"size", probe.eigenvalues.size()}};
  }
  const std::string text = out.dump(2) + "\n";
  if (opts.out_path.empty())
    std::cout << text;
  else
    write_file(opts.out_path, text);

  switch (report.verdict) {
    case heis::Verdict::kCertified: return 0;
    case heis::Verdict::kRefuted: return 1;
    case heis::Verdict::kInconclusive: return 2;
  }
  return 5;
}

int run_gram(CommonOpts& opts) {
  json config = effective_config(opts, load_config(opts.config_path), "gram", "");
  const std::string hash = heis::config_hash(config);
  // Path (b) translates by ball differences, so give the domain 2*r1 steps.
  heis::BuiltField built = heis::build_field(config, std::max(1, 2 * opts.r1));
  const heis::GramPair gram =
      heis::gram_oracle(built.field, built.lattice, opts.r1, opts.r2);

  const std::string prefix = opts.out_path.empty() ? "gram" : opts.out_path;
  write_file(prefix + ".direct.csv",
             heis::gram_csv(gram.ball, gram.direct, built.field, hash));
  write_file(prefix + ".bracket.csv",
             heis::gram_csv(gram.ball, gram.via_bracket, built.field, hash));

  json summary;
  summary["version"] = heis::version();
  summary["config_hash"] = hash;
  summary["max_abs_entry"] = gram.max_abs_entry;
  summary["max_deviation"] = gram.max_deviation;
  summary["max_asymmetry"] = gram.max_asymmetry;
  summary["hermitian"] = gram.hermitian;
  summary["ball_size"] = gram.ball.size();
  write_file(prefix + ".summary.json", summary.dump(2) + "\n");
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int run_check(const CommonOpts& opts, const std::string& lemma, int trials) {
  const heis::SuiteResult res = heis::run_suite(lemma, trials, opts.seed);
  json out;
  out["suite"] = res.name;
  out["trials"] = res.trials;
  out["max_residual"] = res.max_residual;
  out["tolerance"] = res.tolerance;
  out["passed"] = res.passed;
  const std::string text = out.dump(2) + "\n";
  if (!opts.out_path.empty()) write_file(opts.out_path, text);
  std::cout << text;
  return res.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bracket maps and frame certification on the Heisenberg group"};
  app.set_version_flag("--version", heis::version());
  app.require_subcommand(1);

  CommonOpts opts;
  std::string mode = "frame";
  std::string lemma = "modulation";
  int trials = 50;

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    if (needs_config)
      cmd->add_option("config", opts.config_path, "input spec JSON")->required();
    cmd->add_option("--out", opts.out_path, "output path (profile/certify: file, gram: prefix)");
    cmd->add_option("--alpha-res", opts.alpha_res, "override alpha resolution (power of two)");
    cmd->add_option("--band", opts.band, "override band window J_lo J_hi")->expected(2);
    cmd->add_option("--r1", opts.r1, "gamma_1 ball radius");
    cmd->add_option("--r2", opts.r2, "gamma_2 ball radius");
    cmd->add_option("--tol", opts.tol, "certification tolerance");
    cmd->add_option("--tau", opts.tau, "support threshold (absolute; default relative)");
    cmd->add_option("--seed", opts.seed, "seed for randomized suites");
  };

  CLI::App* profile = app.add_subcommand("profile", "bracket profile [psi,psi] as CSV");
  add_common(profile, true);

  CLI::App* certify = app.add_subcommand("certify", "run a certifier, emit a JSON report");
  add_common(certify, true);
  certify->add_option("--mode", mode, "onb | riesz | frame")->required();

  CLI::App* gram = app.add_subcommand("gram", "direct and bracket-path Gram matrices");
  add_common(gram, true);

  CLI::App* check = app.add_subcommand("check", "seeded property suite for one bracket law");
  add_common(check, false);
  check->add_option("--lemma", lemma,
                    "modulation | covariance | cauchy-schwarz | dual-integrability | isometry")
      ->required();
  check->add_option("--trials", trials, "number of randomized trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  for (CLI::App* sub : {profile, certify, gram}) {
    if (sub->parsed()) {
      opts.r1_given = sub->count("--r1") > 0;
      opts.r2_given = sub->count("--r2") > 0;
    }
  }

  try {
    if (profile->parsed()) return run_profile(opts);
    if (certify->parsed()) return run_certify(opts, mode);
    if (gram->parsed()) return run_gram(opts);
    if (check->parsed()) return run_check(opts, lemma, trials);
  } catch (const heis::spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const heis::grid_error& e) {
    std::cerr << "grid error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 3;
}
