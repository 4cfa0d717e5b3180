#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gks/cases.hpp"
#include "gks/flux.hpp"
#include "gks/grid.hpp"
#include "gks/reconstruction.hpp"

namespace gks {

enum class TimeScheme {
  /// Two-stage fourth-order update.
  two_stage,
  /// Flux integrated once over the step (second order in time).
  single_window,
};

struct SolverOptions
{
  double cfl = 0.4;
  ReconVariables recon = ReconVariables::characteristic;
  TimeScheme scheme = TimeScheme::two_stage;
  CollisionModel collision;
  bool viscous_bound = true;
  int workers = 1;
  /// Diagnostics history is recorded every diag_every steps (0 disables).
  int diag_every = 1;
  long max_steps = -1;
  bool steady = false;
  double steady_tol = 1e-10;
  /// Overrides the CFL step (the final step is still clipped).
  std::optional<double> fixed_dt;

  static SolverOptions for_case(const CaseSpec& spec);
};

struct DiagRecord
{
  long step = 0;
  double t = 0.0;
  double dt = 0.0;
  double min_rho = 0.0;
  double min_p = 0.0;
  double residual = 0.0;
  Vec4 totals{};
};

struct Diagnostics
{
  Vec4 initial_totals{};
  Vec4 totals{};
  /// Minima over every accepted stage of the run.
  double min_rho = 0.0;
  double min_p = 0.0;
  /// Largest relative change of any conserved total within one step.
  double max_step_drift = 0.0;
  /// Faces where a WENO side value was replaced by the cell average.
  long long fallback_faces = 0;
  double last_residual = 0.0;
  bool converged = false;
  std::vector<DiagRecord> history;

  /// max_k |totals_k - initial_k| / max(|initial_k|, tiny).
  double relative_drift() const;
};

struct RunState
{
  double t = 0.0;
  long step = 0;
  Field field;
  Diagnostics diag;
};

/// Window-integrated face fluxes. x faces are indexed j * (nx + 1) + i for
/// the face left of cell i, y faces j * nx + i for the face below cell j.
struct FaceFluxes
{
  std::vector<Vec4> x_half, x_full;
  std::vector<Vec4> y_half, y_full;
};

class Solver
{
 public:
  /// Throws ConfigError.
  Solver(CaseSpec spec, const StructuredGrid& grid, SolverOptions options);

  const CaseSpec& spec() const { return spec_; }
  const StructuredGrid& grid() const { return grid_; }
  const SolverOptions& options() const { return options_; }

  RunState initial_state() const;
  /// Takes ownership of a field (for restarts and tests).
  RunState state_from(Field field, double t = 0.0, long step = 0) const;

  double time_step(const RunState& run) const;

  /// One step of size dt. Throws NonPhysicalState naming the cell.
  void step(RunState& run, double dt) const;

  /// Steps until t_final (clipping the last step) or, for steady runs, until
  /// the density residual drops below the tolerance.
  void advance_to(RunState& run, double t_final) const;

  /// Fills ghosts of w at time t and returns integrated fluxes over [0, dt/2]
  /// (when half is set) and [0, dt].
  FaceFluxes window_fluxes(Field& w, double t, double dt, bool half, long long* fallbacks = nullptr) const;

  /// out = base - scale (dFx / dx + dFy / dy) on interior cells.
  void apply_fluxes(Field& out, const Field& base, const std::vector<Vec4>& fx, const std::vector<Vec4>& fy,
                    double scale) const;

 private:
  CaseSpec spec_;
  StructuredGrid grid_;
  SolverOptions options_;
};

struct ConvergenceRow
{
  Mesh mesh;
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  std::optional<double> order_l1;
  std::optional<double> order_l2;
  std::optional<double> order_linf;
  long steps = 0;
};

/// Runs every mesh of the case and compares density with its reference at
/// the final time. Throws ConfigError when the case has no reference.
std::vector<ConvergenceRow> run_convergence_study(const CaseSpec& spec, const SolverOptions& options);

/// min rho and min p over interior cells; throws NonPhysicalState with the
/// cell index for the first non-physical cell.
std::pair<double, double> check_physical(const Field& field, const GasModel& gas, const char* where, long step);

/// Versioned text checkpoint with hexadecimal floats. Throws IoError.
void write_checkpoint(const RunState& run, const std::string& case_name, const std::string& path);
RunState read_checkpoint(const std::string& path, std::string* case_name = nullptr);

} // namespace gks
