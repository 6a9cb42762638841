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

// pntomo command-line front end: compute photon-number tomograms, reconstruct
// density matrices, evaluate fidelity/purity, validate the closed-form
// star-product kernels, and run quantumness checks.
//
// Exit codes are a stable contract:
//   0  success (quantumness check passed, where applicable)
//   2  state-spec parse error
//   3  configuration validation failure
//   4  malformed or missing input file
//   5  divergence (reconstruction trace defect above threshold)
//   10 quantumness violation (nonnegativity failed)

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pnt/pnt.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitFile = 4;
constexpr int kExitDivergence = 5;
constexpr int kExitQuantumness = 10;

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void add_config_options(CLI::App* sub, pnt::RunConfig* cfg) {
  sub->add_option("--dim", cfg->dim, "Fock cutoff");
  sub->add_option("--n-max", cfg->n_max, "largest photon number in the grid");
  sub->add_option("--radius", cfg->radius, "truncation radius of the alpha plane");
  sub->add_option("--radial", cfg->radial_nodes, "radial quadrature nodes");
  sub->add_option("--angular", cfg->angular_nodes, "angular quadrature nodes");
  sub->add_option("--s-re", cfg->s_re, "Re of the ordering parameter s");
  sub->add_option("--s-im", cfg->s_im, "Im of the ordering parameter s");
  sub->add_option("--seed", cfg->seed, "seed for randomized reports");
  sub->add_flag("--ordered,!--unordered", cfg->ordered_reduction,
                "ordered (bitwise-reproducible) reduction");
  sub->set_config("--config", "", "configuration file (key = value lines)");
}

int run_tomogram(const std::string& state_text, const pnt::RunConfig& cfg, const std::string& out) {
  pnt::StateSpec spec;
  try {
    spec = pnt::StateSpec::parse(state_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  try {
    cfg.validate();
    const pnt::FockSpace space = cfg.space();
    const pnt::DensityMatrix rho = pnt::make_state(space, spec);
    if (rho.truncation_warning)
      std::cerr << "warning: state loses more than " << pnt::tol::kTruncationWarning
                << " of its weight to truncation at dim=" << cfg.dim << "\n";
    const auto grid = pnt::forward_tomogram(rho, cfg.quadrature(), cfg.n_max, cfg.parallel());
    pnt::write_tomogram_csv(grid, out);
  } catch (const pnt::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const pnt::FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

int run_reconstruct(const std::string& in, const pnt::RunConfig& cfg, const std::string& out) {
  try {
    cfg.validate();
    const auto grid = pnt::read_tomogram_csv(in);
    const auto rec = pnt::reconstruct(grid, cfg.ordering(), cfg.space(), cfg.parallel());
    pnt::write_density_json(rec.rho, out);
    std::cout << "trace_defect=" << fmt9(rec.trace_defect)
              << " herm_defect=" << fmt9(rec.hermiticity_defect)
              << " min_eig=" << fmt9(rec.min_eigenvalue) << "\n";
  } catch (const pnt::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const pnt::FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const pnt::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

int run_fidelity(const std::string& a, const std::string& b, const std::string& via,
                 const pnt::RunConfig& cfg) {
  try {
    cfg.validate();
    double f = 0.0;
    if (via == "direct") {
      const auto r1 = pnt::read_density_json(a);
      const auto r2 = pnt::read_density_json(b);
      if (r1.space.dim != r2.space.dim)
        throw pnt::FileFormatError("fidelity: density matrices have different dims");
      f = pnt::mat_trace(pnt::mat_mul(r1.mat, r2.mat)).real();
    } else {
      const auto t1 = pnt::read_tomogram_csv(a);
      const auto t2 = pnt::read_tomogram_csv(b);
      if (!pnt::grids_compatible(t1, t2))
        throw pnt::FileFormatError("fidelity: tomogram grids are incompatible");
      f = pnt::fidelity_via_tomograms(t1, t2, cfg.ordering(), cfg.space(),
                                      pnt::FidelityKernel::Oracle, cfg.parallel());
    }
    std::cout << "fidelity=" << fmt9(f) << "\n";
  } catch (const pnt::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const pnt::FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const pnt::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

int run_purity(const std::string& in, const std::string& via, const pnt::RunConfig& cfg) {
  try {
    cfg.validate();
    double p = 0.0;
    if (via == "direct") {
      const auto r = pnt::read_density_json(in);
      p = pnt::mat_trace(pnt::mat_mul(r.mat, r.mat)).real();
    } else {
      const auto t = pnt::read_tomogram_csv(in);
      p = pnt::purity_via_tomograms(t, cfg.ordering(), cfg.space(), pnt::FidelityKernel::Oracle,
                                    cfg.parallel());
    }
    if (p < -pnt::tol::kBoundsSlack || p > 1.0 + pnt::tol::kBoundsSlack)
      std::cerr << "warning: purity outside [0, 1]\n";
    std::cout << "purity=" << fmt9(p) << "\n";
  } catch (const pnt::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const pnt::FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const pnt::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

int run_kernel_report(const std::string& which, const pnt::RunConfig& cfg, bool dim_given,
                      const std::string& out) {
  try {
    pnt::RunConfig local = cfg;
    // Oracle traces are trustworthy only well below the cutoff; reports
    // default to dim 40 unless the user pins one.
    if (!dim_given) local.dim = 40;
    local.validate();
    pnt::KernelKind kind;
    if (which == "main") {
      kind = pnt::KernelKind::Main;
    } else if (which == "dual") {
      kind = pnt::KernelKind::Dual;
    } else if (which == "fidelity") {
      kind = pnt::KernelKind::Fidelity;
    } else {
      throw pnt::ConfigError("kernel-report: --which must be main, dual or fidelity");
    }
    const auto rep = pnt::make_kernel_report(kind, local.space(), local.ordering(), local.seed);
    if (!out.empty()) pnt::write_kernel_report(rep, out);
    std::cout << "matched=" << rep.matched << "/" << rep.points.size() << "\n";
  } catch (const pnt::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const pnt::FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

int run_check(const std::string& in, const pnt::RunConfig& cfg) {
  try {
    cfg.validate();
    const auto grid = pnt::read_tomogram_csv(in);
    const auto rep = pnt::quantumness_check(grid, cfg.ordering(), cfg.space(), cfg.parallel());
    std::cout << "min_eig=" << fmt9(rep.min_eigenvalue) << " purity=" << fmt9(rep.purity)
              << " nonnegativity=" << (rep.passes ? "pass" : "fail")
              << " bounds=" << (rep.bounds_ok ? "ok" : "violated") << "\n";
    return rep.passes ? kExitOk : kExitQuantumness;
  } catch (const pnt::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const pnt::FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const pnt::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photon-number tomography toolkit"};
  app.require_subcommand(1);

  pnt::RunConfig cfg;
  std::string state_text, in_path, out_path, a_path, b_path;
  std::string via = "tomogram";
  std::string which = "main";

  auto* tomogram = app.add_subcommand("tomogram", "compute a photon-number tomogram grid");
  tomogram->add_option("--state", state_text, "state spec (ground, fock:M, coherent:B, thermal:N, cat:even|odd:B)")
      ->required();
  tomogram->add_option("--out", out_path, "output CSV path")->required();
  add_config_options(tomogram, &cfg);

  auto* rec = app.add_subcommand("reconstruct", "reconstruct a density matrix from a tomogram");
  rec->add_option("--in", in_path, "input tomogram CSV")->required();
  rec->add_option("--out", out_path, "output density-matrix JSON")->required();
  add_config_options(rec, &cfg);

  auto* fid = app.add_subcommand("fidelity", "fidelity Tr[rho1 rho2] of two states");
  fid->add_option("--a", a_path, "first input path")->required();
  fid->add_option("--b", b_path, "second input path")->required();
  fid->add_option("--via", via, "tomogram (CSV inputs) or direct (JSON inputs)")
      ->check(CLI::IsMember({"tomogram", "direct"}));
  add_config_options(fid, &cfg);

  auto* pur = app.add_subcommand("purity", "purity Tr[rho^2] of a state");
  pur->add_option("--in", in_path, "input path")->required();
  pur->add_option("--via", via, "tomogram (CSV input) or direct (JSON input)")
      ->check(CLI::IsMember({"tomogram", "direct"}));
  add_config_options(pur, &cfg);

  auto* ker = app.add_subcommand("kernel-report", "validate a closed-form kernel against its oracle");
  ker->add_option("--which", which, "main, dual or fidelity")
      ->check(CLI::IsMember({"main", "dual", "fidelity"}));
  ker->add_option("--out", out_path, "output report JSON path");
  add_config_options(ker, &cfg);

  auto* chk = app.add_subcommand("check", "quantumness check of a tomogram");
  chk->add_option("--in", in_path, "input tomogram CSV")->required();
  add_config_options(chk, &cfg);

  CLI11_PARSE(app, argc, argv);

  if (tomogram->parsed()) return run_tomogram(state_text, cfg, out_path);
  if (rec->parsed()) return run_reconstruct(in_path, cfg, out_path);
  if (fid->parsed()) return run_fidelity(a_path, b_path, via, cfg);
  if (pur->parsed()) return run_purity(in_path, via, cfg);
  if (ker->parsed()) return run_kernel_report(which, cfg, ker->count("--dim") > 0, out_path);
  if (chk->parsed()) return run_check(in_path, cfg);
  return kExitOk;
}
