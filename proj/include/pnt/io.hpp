// Copyright 2026 The pntomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PNT_IO_HPP
#define PNT_IO_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pnt/errors.hpp"
#include "pnt/starprod.hpp"
#include "pnt/tomography.hpp"

namespace pnt {

/// Desk-scale defaults; every knob of the pipeline in one record.
struct RunConfig {
  int dim = 24;
  int n_max = 20;
  double radius = 6.0;
  int radial_nodes = 64;
  int angular_nodes = 64;
  double s_re = -0.5;
  double s_im = 0.0;
  std::uint64_t seed = 1;
  bool ordered_reduction = true;

  void validate() const {
    std::ostringstream err;
    if (dim < 2) err << "dim must be >= 2; ";
    if (n_max < 0 || n_max > dim - 1) err << "need 0 <= n_max <= dim - 1; ";
    if (!(radius > 0.0)) err << "radius must be positive; ";
    if (radial_nodes < 4) err << "radial nodes must be >= 4; ";
    if (angular_nodes < 4) err << "angular nodes must be >= 4; ";
    if (s_re >= 0.0) err << "ordering parameter requires Re(s) < 0; ";
    if (std::abs(std::hypot(s_re, s_im) - 1.0) < 1e-12) err << "|s| = 1 is excluded; ";
    const std::string msg = err.str();
    if (!msg.empty()) throw ConfigError("invalid configuration: " + msg);
  }

  FockSpace space() const { return FockSpace(dim); }
  OrderingParameter ordering() const { return OrderingParameter::from_s({s_re, s_im}); }
  QuadratureScheme quadrature() const { return disk_quadrature(radius, radial_nodes, angular_nodes); }
  ParallelOptions parallel() const { return ParallelOptions{ordered_reduction, 0}; }
};

namespace detail {

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline double parse_double(const std::string& text, const std::string& what) {
  const char* start = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(start, &end);
  if (end == start || *end != '\0' || !std::isfinite(v))
    throw FileFormatError("malformed " + what + ": '" + text + "'");
  return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace detail

// --------------------------- tomogram CSV ----------------------------------

inline void write_tomogram_csv(const TomogramGrid& grid, std::ostream& out) {
  out << "n,re_alpha,im_alpha,weight,value\n";
  for (int n = 0; n <= grid.n_max; ++n) {
    for (std::size_t k = 0; k < grid.node_count(); ++k) {
      const auto& node = grid.scheme.nodes[k];
      out << n << ',' << detail::fmt_double(node.alpha.real()) << ','
          << detail::fmt_double(node.alpha.imag()) << ',' << detail::fmt_double(node.weight) << ','
          << detail::fmt_double(grid.value(n, k)) << '\n';
    }
  }
}

inline void write_tomogram_csv(const TomogramGrid& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot open for writing: " + path);
  write_tomogram_csv(grid, out);
}

inline TomogramGrid read_tomogram_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FileFormatError("tomogram CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "n,re_alpha,im_alpha,weight,value")
    throw FileFormatError("tomogram CSV: bad header '" + line + "'");
  struct Row {
    int n;
    Complex alpha;
    double weight, value;
  };
  std::vector<Row> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 5)
      throw FileFormatError("tomogram CSV: line " + std::to_string(lineno) + " has " +
                            std::to_string(f.size()) + " fields");
    Row r;
    const double nval = detail::parse_double(f[0], "photon number");
    if (nval < 0 || nval != std::floor(nval))
      throw FileFormatError("tomogram CSV: bad photon number on line " + std::to_string(lineno));
    r.n = static_cast<int>(nval);
    r.alpha = Complex(detail::parse_double(f[1], "re_alpha"), detail::parse_double(f[2], "im_alpha"));
    r.weight = detail::parse_double(f[3], "weight");
    r.value = detail::parse_double(f[4], "value");
    rows.push_back(r);
  }
  if (rows.empty()) throw FileFormatError("tomogram CSV: no data rows");
  // rows are n-major; the n = 0 block defines the node list
  std::size_t nodes = 0;
  while (nodes < rows.size() && rows[nodes].n == 0) ++nodes;
  if (nodes == 0 || rows.size() % nodes != 0)
    throw FileFormatError("tomogram CSV: inconsistent node blocks");
  const std::size_t blocks = rows.size() / nodes;
  TomogramGrid grid;
  grid.n_max = static_cast<int>(blocks) - 1;
  grid.scheme.radius = 0.0;
  grid.scheme.radial_nodes = 0;
  grid.scheme.angular_nodes = 0;
  grid.scheme.nodes.reserve(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    grid.scheme.nodes.push_back({rows[k].alpha, rows[k].weight});
    grid.scheme.radius = std::max(grid.scheme.radius, std::abs(rows[k].alpha));
  }
  grid.values.assign(rows.size(), 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t k = 0; k < nodes; ++k) {
      const Row& r = rows[b * nodes + k];
      if (r.n != static_cast<int>(b))
        throw FileFormatError("tomogram CSV: photon blocks out of order");
      if (std::abs(r.alpha - grid.scheme.nodes[k].alpha) > 1e-9 ||
          std::abs(r.weight - grid.scheme.nodes[k].weight) > 1e-12)
        throw FileFormatError("tomogram CSV: node mismatch across photon blocks");
      grid.value(static_cast<int>(b), k) = r.value;
    }
  }
  return grid;
}

inline TomogramGrid read_tomogram_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open tomogram CSV: " + path);
  return read_tomogram_csv(in);
}

// ------------------------- density matrix JSON -----------------------------

inline void write_density_json(const DensityMatrix& rho, std::ostream& out) {
  nlohmann::json j;
  const int dim = rho.space.dim;
  j["dim"] = dim;
  auto& re = j["re"] = nlohmann::json::array();
  auto& im = j["im"] = nlohmann::json::array();
  for (int i = 0; i < dim; ++i) {
    nlohmann::json row_re = nlohmann::json::array();
    nlohmann::json row_im = nlohmann::json::array();
    for (int k = 0; k < dim; ++k) {
      row_re.push_back(rho.mat(i, k).real());
      row_im.push_back(rho.mat(i, k).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  out << j.dump(1) << '\n';
}

inline void write_density_json(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot open for writing: " + path);
  write_density_json(rho, out);
}

inline DensityMatrix read_density_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError(std::string("density JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im"))
    throw FileFormatError("density JSON: expected {dim, re, im}");
  int dim = 0;
  try {
    dim = j.at("dim").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw FileFormatError("density JSON: bad dim");
  }
  if (dim < 2) throw FileFormatError("density JSON: dim must be >= 2");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || static_cast<int>(re.size()) != dim ||
      static_cast<int>(im.size()) != dim)
    throw FileFormatError("density JSON: re/im must be dim x dim arrays");
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    const auto& rr = re[i];
    const auto& ri = im[i];
    if (!rr.is_array() || !ri.is_array() || static_cast<int>(rr.size()) != dim ||
        static_cast<int>(ri.size()) != dim)
      throw FileFormatError("density JSON: re/im must be dim x dim arrays");
    for (int k = 0; k < dim; ++k) {
      double a, b;
      try {
        a = rr[k].get<double>();
        b = ri[k].get<double>();
      } catch (const nlohmann::json::exception&) {
        throw FileFormatError("density JSON: non-numeric entry");
      }
      if (!std::isfinite(a) || !std::isfinite(b))
        throw FileFormatError("density JSON: non-finite entry");
      m(i, k) = Complex(a, b);
    }
  }
  return DensityMatrix{FockSpace(dim), m, false};
}

inline DensityMatrix read_density_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open density JSON: " + path);
  return read_density_json(in);
}

// -------------------------- kernel report JSON -----------------------------

inline nlohmann::json kernel_report_json(const KernelReport& rep) {
  nlohmann::json j;
  j["kind"] = rep.kind == KernelKind::Main ? "main" : rep.kind == KernelKind::Dual ? "dual" : "fidelity";
  j["dim"] = rep.dim;
  j["s"] = {rep.s.real(), rep.s.imag()};
  j["seed"] = rep.seed;
  j["tolerance_rel"] = rep.tolerance;
  j["matched"] = rep.matched;
  if (rep.kind == KernelKind::Dual) j["amended_matched"] = rep.amended_matched;
  j["total"] = static_cast<int>(rep.points.size());
  j["oracle_symmetry_defect"] = rep.oracle_symmetry_defect;
  j["oracle_cyclicity_defect"] = rep.oracle_cyclicity_defect;
  if (rep.kind == KernelKind::Fidelity) j["oracle_realness_defect"] = rep.oracle_realness_defect;
  auto pt = [](const PhasePoint& x) {
    return nlohmann::json{{"n", x.n}, {"re", x.alpha.real()}, {"im", x.alpha.imag()}};
  };
  auto& points = j["points"] = nlohmann::json::array();
  for (const auto& r : rep.points) {
    nlohmann::json row;
    row["x1"] = pt(r.x1);
    row["x2"] = pt(r.x2);
    if (rep.kind != KernelKind::Fidelity) row["x3"] = pt(r.x3);
    row["transcription"] = {r.transcription.real(), r.transcription.imag()};
    if (rep.kind == KernelKind::Dual) {
      row["amended"] = {r.amended.real(), r.amended.imag()};
      row["amended_verdict"] = r.amended_match ? "match" : "mismatch";
    }
    row["oracle"] = {r.oracle.real(), r.oracle.imag()};
    row["abs_diff"] = r.abs_diff;
    row["rel_diff"] = r.rel_diff;
    row["verdict"] = r.match ? "match" : "mismatch";
    points.push_back(std::move(row));
  }
  return j;
}

inline void write_kernel_report(const KernelReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot open for writing: " + path);
  out << kernel_report_json(rep).dump(1) << '\n';
}

}  // namespace pnt

#endif  // PNT_IO_HPP
