#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gks/boundary.hpp"
#include "gks/gas.hpp"
#include "gks/grid.hpp"
#include "gks/reconstruction.hpp"

namespace gks {

struct Mesh
{
  int nx = 0;
  int ny = 1;
};

enum class ReferenceKind { none, exact_riemann, advected_wave, isentropic_vortex, blasius, external_table };

/// Point-wise primitive state as a function of (x, y, t).
using PointState = std::function<Primitive(double x, double y, double t)>;

struct ReferenceSolution
{
  ReferenceKind kind = ReferenceKind::none;
  /// Evaluable for exact_riemann, advected_wave and isentropic_vortex.
  PointState eval;
  bool available() const { return static_cast<bool>(eval); }
};

/// Error norms either divide by the cell count or weight each cell by its
/// volume (sum |e| dV, sqrt(sum e^2 dV)).
enum class NormScale { volume_averaged, integrated };

struct CaseSpec
{
  std::string name;
  std::string description;
  Dimension dim = Dimension::one;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  std::vector<Mesh> meshes;
  double t_final = 0.0;
  double cfl = 0.4;
  GasModel gas;
  BoundarySet bc;
  ReconVariables recon = ReconVariables::characteristic;
  std::string initializer;
  ReferenceKind reference = ReferenceKind::none;
  NormScale norm_scale = NormScale::volume_averaged;
  /// Steady problems march until the density residual drops below this.
  bool steady = false;
  double steady_tol = 1e-10;

  /// Throws ConfigError.
  void validate() const;
  StructuredGrid grid(const Mesh& mesh) const;
  StructuredGrid grid() const { return grid(meshes.front()); }
};

/// Names of every registered case in registry order.
std::vector<std::string> case_names();
/// Throws ConfigError for an unknown name.
CaseSpec make_case(const std::string& name);

/// Point-wise initial state for an initializer id. Throws ConfigError.
PointState initial_state(const CaseSpec& spec);

/// Cell averages of the initial data (5-point Gauss rule per direction);
/// ghosts left zero. Throws ConfigError for an unknown initializer.
Field init_case(const CaseSpec& spec, const StructuredGrid& grid);

/// Cell averages of the primitive-to-conserved image of a point function.
Field cell_averages(const PointState& f, double t, const StructuredGrid& grid, const GasModel& gas);

ReferenceSolution reference_solution(const CaseSpec& spec);

} // namespace gks
