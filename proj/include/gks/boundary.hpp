#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gks/gas.hpp"
#include "gks/grid.hpp"

namespace gks {

enum class Side { xlo, xhi, ylo, yhi };

enum class BoundaryKind {
  periodic,
  reflective_slip,
  symmetric,
  non_reflecting,
  no_slip_adiabatic,
  no_slip_isothermal,
  dirichlet_fixed,
  moving_shock,
};

std::string to_string(BoundaryKind kind);
/// Throws ConfigError.
BoundaryKind boundary_kind_from_string(const std::string& name);

struct BoundarySpec
{
  BoundaryKind kind = BoundaryKind::non_reflecting;
  /// Segment of the side along the tangential coordinate, [from, to).
  double from = -std::numeric_limits<double>::infinity();
  double to = std::numeric_limits<double>::infinity();

  /// dirichlet_fixed state, non_reflecting far field (optional), moving_shock
  /// pre-shock state.
  std::optional<Primitive> state;
  /// dirichlet_fixed: point state (x, y), averaged over each ghost cell; takes
  /// precedence over state.
  std::function<Primitive(double x, double y)> profile;
  /// Wall temperature p/rho for no_slip_isothermal.
  double t_wall = 1.0;
  /// Tangential wall velocity for the no-slip kinds.
  double wall_velocity = 0.0;
  /// moving_shock: shock Mach number, angle between shock and the x axis in
  /// degrees, x position of the foot at y = 0, t = 0.
  double mach = 10.0;
  double angle_deg = 60.0;
  double x_foot = 1.0 / 6.0;

  /// Throws ConfigError.
  void validate() const;
};

struct BoundarySet
{
  std::vector<BoundarySpec> xlo, xhi, ylo, yhi;

  static BoundarySet all(const BoundarySpec& spec);
  std::vector<BoundarySpec>& side(Side s);
  const std::vector<BoundarySpec>& side(Side s) const;
  void validate(const StructuredGrid& grid) const;
};

/// Post-shock primitive state behind a normal shock of Mach ms moving into
/// pre at rest, velocity along the shock normal (cos, sin) of the angle.
Primitive post_shock_state(const Primitive& pre, double ms, double normal_angle_rad, const GasModel& gas);

/// x position of a moving oblique shock at height y and time t.
double moving_shock_position(const BoundarySpec& spec, double y, double t, const GasModel& gas);

/// Fills every ghost cell; x sides first, then y sides across the full x
/// range so corners are defined. Throws ConfigError for an uncovered side.
void fill_ghost(Field& field, const BoundarySet& bc, double t, const GasModel& gas);

} // namespace gks
