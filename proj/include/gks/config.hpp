#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gks/cases.hpp"
#include "gks/solver.hpp"

namespace gks {

enum class OutputFormat { csv, vtk };

/// Parsed run configuration. Unset optionals fall back to the case defaults.
struct RunConfig
{
  std::string case_name;
  std::optional<int> nx, ny;
  /// Mesh list for convergence studies ("20,40,80" or "20x20,40x40").
  std::vector<Mesh> meshes;
  std::optional<double> cfl;
  std::optional<double> t_final;
  std::optional<ReconVariables> recon;
  TimeScheme scheme = TimeScheme::two_stage;
  std::optional<NormScale> norm_scale;

  std::optional<double> gamma, mu, prandtl, tau_eps, tau_c;
  std::optional<bool> split_tau;

  std::string out_dir = "out";
  OutputFormat format = OutputFormat::csv;
  /// Field snapshots every n steps (0: final field only).
  int output_every = 0;
  int diag_every = 1;

  /// 0 means: take GKS_WORKERS or 1.
  int workers = 0;
  long max_steps = -1;
  std::optional<double> steady_tol;
  std::optional<double> fixed_dt;
  bool viscous_bound = true;
  std::string checkpoint;
  std::string restart;
  std::string reference_table;
};

/// key = value lines, '#' comments, optional [section] headers. Every key
/// belongs to one section and may also appear before any header. Throws
/// ConfigError naming the line.
RunConfig parse_config(const std::string& text);

/// Reads and parses a file. Throws IoError if it cannot be read.
RunConfig load_config(const std::string& path);

/// Case with the configuration overrides applied. Throws ConfigError.
CaseSpec build_case(const RunConfig& cfg);
SolverOptions build_options(const RunConfig& cfg, const CaseSpec& spec);

/// Worker count from the config, else GKS_WORKERS, else 1.
int resolve_workers(int configured);

std::string to_string(ReconVariables v);
std::string to_string(TimeScheme s);
std::string to_string(OutputFormat f);
std::string to_string(NormScale s);

} // namespace gks
