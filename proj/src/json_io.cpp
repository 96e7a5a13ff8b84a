// json_io.cpp

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

#include "heis/json_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace heis {

namespace {

Eigen::MatrixXd matrix_from_json(const json& j, int d, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw spec_error(std::string(what) + ": expected a " + std::to_string(d) + "-row matrix");
  Eigen::MatrixXd m(d, d);
  for (int r = 0; r < d; ++r) {
    const auto& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw spec_error(std::string(what) + ": row " + std::to_string(r) + " malformed");
    for (int c = 0; c < d; ++c) m(r, c) = row.at(c).get<double>();
  }
  return m;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw spec_error(std::string("config: missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

}  // namespace

WindowSpec window_from_json(const json& j) {
  const std::string kind = j.value("kind", "");
  if (kind == "box") {
    const auto& support = j.at("support");
    if (!support.is_array() || support.size() != 2)
      throw spec_error("box window: 'support' must be [a, b]");
    return WindowSpec::box(support.at(0).get<double>(), support.at(1).get<double>());
  }
  if (kind == "gauss") return WindowSpec::gauss(require_number(j, "sigma"));
  if (kind == "samples") {
    const auto& vals = j.at("values");
    if (!vals.is_array() || vals.empty()) throw spec_error("sample window: empty values");
    Eigen::VectorXcd v(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) {
      const auto& e = vals.at(i);
      if (e.is_array() && e.size() == 2)
        v[static_cast<Eigen::Index>(i)] = cplx(e.at(0).get<double>(), e.at(1).get<double>());
      else if (e.is_number())
        v[static_cast<Eigen::Index>(i)] = cplx(e.get<double>(), 0.0);
      else
        throw spec_error("sample window: values must be numbers or [re, im]");
    }
    const double h = require_number(j, "h");
    const double lo = j.value("lo", 0.0);
    SpatialGridPtr grid =
        make_grid(1, Eigen::VectorXd::Constant(1, lo), h, static_cast<int>(v.size()));
    return WindowSpec::from_samples(std::move(grid), std::move(v));
  }
  throw spec_error("window: unknown kind '" + kind + "'");
}

json window_to_json(const WindowSpec& w) {
  json j;
  switch (w.kind) {
    case WindowSpec::Kind::kBox:
      j["kind"] = "box";
      j["support"] = {w.box_lo, w.box_hi};
      break;
    case WindowSpec::Kind::kGauss:
      j["kind"] = "gauss";
      j["sigma"] = w.sigma;
      break;
    case WindowSpec::Kind::kSamples: {
      j["kind"] = "samples";
      j["h"] = w.samples_grid->h();
      j["lo"] = w.samples_grid->lo()[0];
      json vals = json::array();
      for (Eigen::Index i = 0; i < w.samples.size(); ++i)
        vals.push_back({w.samples[i].real(), w.samples[i].imag()});
      j["values"] = vals;
      break;
    }
  }
  return j;
}

LatticeSpecPtr lattice_from_json(const json& j) {
  const int d = static_cast<int>(require_number(j, "d"));
  if (d < 1) throw spec_error("lattice: d must be >= 1");
  return std::make_shared<const LatticeSpec>(matrix_from_json(j.at("A"), d, "lattice A"),
                                             matrix_from_json(j.at("B"), d, "lattice B"));
}

json lattice_to_json(const LatticeSpec& s) {
  json j;
  j["d"] = s.dim();
  j["A"] = matrix_to_json(s.a());
  j["B"] = matrix_to_json(s.b());
  return j;
}

BuiltField build_field(const json& config, int margin_r1) {
  if (!config.contains("field") || !config.at("field").is_object())
    throw spec_error("config: missing 'field' object");
  const json& f = config.at("field");
  const std::string kind = f.value("kind", "");

  if (kind == "gabor_bandlimited") {
    const WindowSpec window = window_from_json(f.at("window"));
    const double epsilon = require_number(f, "epsilon");
    const int alpha_res = static_cast<int>(require_number(f, "alpha_res"));
    const double a = require_number(f, "a");
    const double b = require_number(f, "b");
    const double h = f.value("h", 1.0 / 64.0);
    GaborConstruction c =
        GaborConstruction::create(window, epsilon, a, b, alpha_res, h, margin_r1);
    if (config.contains("lattice")) c.lattice = lattice_from_json(config.at("lattice"));
    BuiltField out{band_field(c), c.lattice, c};
    return out;
  }

  if (kind == "orthonormal_fixture") {
    const int alpha_res = static_cast<int>(require_number(f, "alpha_res"));
    const double h = f.value("h", 1.0 / 32.0);
    const int a = static_cast<int>(require_number(f, "a"));
    const int b = static_cast<int>(require_number(f, "b"));
    FixtureResult fixture = orthonormal_fixture(alpha_res, h, a, b, std::max(margin_r1, 1));
    LatticeSpecPtr lattice = fixture.lattice;
    if (config.contains("lattice")) lattice = lattice_from_json(config.at("lattice"));
    return BuiltField{std::move(fixture.field), std::move(lattice), std::nullopt};
  }

  if (kind == "zero" || kind == "explicit") {
    const int alpha_res = static_cast<int>(require_number(f, "alpha_res"));
    int band_lo = 0, band_hi = 0;
    if (f.contains("band")) {
      band_lo = f.at("band").at(0).get<int>();
      band_hi = f.at("band").at(1).get<int>();
    }
    const json& g = f.at("grid");
    const int d = static_cast<int>(require_number(g, "d"));
    const double h = require_number(g, "h");
    const int n_axis = static_cast<int>(require_number(g, "n_axis"));
    Eigen::VectorXd lo(d);
    const auto& lo_json = g.at("lo");
    if (!lo_json.is_array() || static_cast<int>(lo_json.size()) != d)
      throw spec_error("field: grid.lo must have d entries");
    for (int i = 0; i < d; ++i) lo[i] = lo_json.at(i).get<double>();
    SpatialGridPtr grid = make_grid(d, std::move(lo), h, n_axis);
    OperatorField field(FrequencyGrid(alpha_res, band_lo, band_hi, d), grid);

    if (kind == "explicit") {
      const auto read_vector = [&](const json& arr, const char* what) {
        if (!arr.is_array() || static_cast<long>(arr.size()) != grid->total())
          throw spec_error(std::string("explicit field: ") + what + " must list " +
                           std::to_string(grid->total()) + " values");
        WindowVector w;
        w.grid = grid;
        w.values.resize(grid->total());
        for (long i = 0; i < grid->total(); ++i) {
          const auto& e = arr.at(static_cast<size_t>(i));
          if (e.is_array() && e.size() == 2)
            w.values[i] = cplx(e.at(0).get<double>(), e.at(1).get<double>());
          else if (e.is_number())
            w.values[i] = cplx(e.get<double>(), 0.0);
          else
            throw spec_error("explicit field: values must be numbers or [re, im]");
        }
        return w;
      };
      for (const json& entry : f.at("entries")) {
        const int i = static_cast<int>(require_number(entry, "i"));
        const int j = static_cast<int>(require_number(entry, "j"));
        field.set_entry(i, j,
                        HSOperator::rank_one(read_vector(entry.at("left"), "left"),
                                             read_vector(entry.at("right"), "right")));
      }
    }

    LatticeSpecPtr lattice;
    if (config.contains("lattice"))
      lattice = lattice_from_json(config.at("lattice"));
    else
      lattice = std::make_shared<const LatticeSpec>(Eigen::MatrixXd::Identity(d, d),
                                                    Eigen::MatrixXd::Identity(d, d));
    return BuiltField{std::move(field), std::move(lattice), std::nullopt};
  }

  throw spec_error("field: unknown kind '" + kind + "'");
}

json report_to_json(const CertReport& r, const std::string& hash) {
  json j;
  j["version"] = version();
  j["config_hash"] = hash;
  j["verdict"] = to_string(r.verdict);
  j["A_est"] = r.a_est;
  j["B_est"] = r.b_est;
  j["condition_residual"] = r.condition_residual;
  if (r.central_residual) j["central_gram_residual"] = *r.central_residual;
  if (r.violation) {
    json v;
    v["n"] = std::vector<int>(r.violation->n.data(),
                              r.violation->n.data() + r.violation->n.size());
    v["m"] = std::vector<int>(r.violation->m.data(),
                              r.violation->m.data() + r.violation->m.size());
    v["alpha"] = r.violation->alpha;
    v["value"] = {r.violation->value.real(), r.violation->value.imag()};
    j["violation"] = v;
  }
  json params;
  params["mode"] = r.mode;
  params["alpha_res"] = r.alpha_res;
  params["band"] = {r.band_lo, r.band_hi};
  params["r1"] = r.r1;
  params["r2"] = r.r2;
  params["tol"] = r.tol;
  params["tau"] = r.tau;
  if (r.lattice) params["lattice"] = lattice_to_json(*r.lattice);
  if (r.grid) {
    json g;
    g["d"] = r.grid->dim();
    g["lo"] = std::vector<double>(r.grid->lo().data(),
                                  r.grid->lo().data() + r.grid->lo().size());
    g["h"] = r.grid->h();
    g["n_axis"] = r.grid->n_axis();
    params["grid"] = g;
  }
  j["parameters"] = params;
  return j;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(cplx v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", v.real(), v.imag());
  return buf;
}

std::string config_hash(const json& effective_config) {
  const std::string dump = effective_config.dump();
  std::uint64_t hash = 1469598103934665603ull;  // FNV-1a
  for (const unsigned char c : dump) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, hash);
  return buf;
}

namespace {

void write_header(std::ostringstream& os, const OperatorField& field,
                  const std::string& hash) {
  const FrequencyGrid& fg = field.fgrid();
  const SpatialGrid& g = *field.grid();
  os << "# heisbracket " << version() << "\n";
  os << "# config_hash " << hash << "\n";
  os << "# alpha_res " << fg.alpha_res << " band " << fg.band_lo << " " << fg.band_hi
     << " weight " << fg.weight_name << " weight_dim " << fg.weight_dim << "\n";
  os << "# grid d " << g.dim() << " lo";
  for (int i = 0; i < g.dim(); ++i) os << " " << format_double(g.lo()[i]);
  os << " h " << format_double(g.h()) << " n_axis " << g.n_axis() << "\n";
}

std::string lattice_label(const LatticePoint& p) {
  std::ostringstream os;
  os << "g(";
  for (Eigen::Index i = 0; i < p.n.size(); ++i) os << (i ? "_" : "") << p.n[i];
  os << ";";
  for (Eigen::Index i = 0; i < p.m.size(); ++i) os << (i ? "_" : "") << p.m[i];
  os << ";" << p.k << ")";
  return os.str();
}

}  // namespace

std::string profile_csv(const BracketProfile& prof, const OperatorField& field,
                        const std::string& hash) {
  std::ostringstream os;
  write_header(os, field, hash);
  os << "alpha,re,im\n";
  for (Eigen::Index i = 0; i < prof.values.size(); ++i) {
    os << format_double(prof.alpha(static_cast<int>(i))) << ","
       << format_double(prof.values[i].real()) << ","
       << format_double(prof.values[i].imag()) << "\n";
  }
  return os.str();
}

std::string gram_csv(const std::vector<LatticePoint>& ball, const Eigen::MatrixXcd& m,
                     const OperatorField& field, const std::string& hash) {
  std::ostringstream os;
  write_header(os, field, hash);
  os << "gamma";
  for (const auto& p : ball) os << "," << lattice_label(p);
  os << "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << lattice_label(ball[static_cast<size_t>(r)]);
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << "," << format_complex(m(r, c));
    os << "\n";
  }
  return os.str();
}

}  // namespace heis
