#pragma once

#include <optional>

#include "gks/vec4.hpp"

namespace gks {

enum class Dimension { one = 1, two = 2 };

/// Ideal gas with BGK transport parameters.
struct GasModel
{
  double gamma = 1.4;
  /// Internal degrees of freedom for the active dimension.
  double K = 3.0;
  Dimension dim = Dimension::two;
  /// Dynamic viscosity; absent for inviscid runs.
  std::optional<double> mu;
  double prandtl = 1.0;
  /// Artificial-dissipation constant of the inviscid collision time.
  double tau_eps = 0.05;
  /// Pressure-jump constant of the collision time.
  double tau_c = 1.0;

  /// K = (4-2g)/(g-1) in 2D and (3-g)/(g-1) in 1D. Throws ConfigError on bad input.
  static GasModel ideal(double gamma, Dimension dim);

  bool viscous() const { return mu.has_value(); }

  /// Degrees of freedom carried by the lumped xi variables. In 1D mode the v
  /// velocity is kept (with V = 0) and counts as one of the K internal degrees.
  double xi_dof() const { return dim == Dimension::one ? K - 1.0 : K; }

  void validate() const;
};

struct Conserved
{
  double rho = 0.0;
  double rho_u = 0.0;
  double rho_v = 0.0;
  double rho_e = 0.0;

  static constexpr Conserved from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
  constexpr Vec4 vec() const { return {rho, rho_u, rho_v, rho_e}; }
};

struct Primitive
{
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
  /// Maxwellian exponent parameter rho / (2 p).
  double lambda = 0.0;

  static Primitive from_rho_u_v_p(double rho, double u, double v, double p);
};

/// Throws NonPhysicalState when rho <= 0 or the internal energy is not positive.
Primitive primitive_from_conserved(const Conserved& w, const GasModel& gas);
Primitive primitive_from_conserved(const Vec4& w, const GasModel& gas);

Conserved conserved_from_primitive(const Primitive& prim, const GasModel& gas);

/// Inviscid flux through a face with normal along x.
Vec4 euler_flux_x(const Primitive& prim, const GasModel& gas);

double sound_speed(const Primitive& prim, const GasModel& gas);

/// True when rho > 0 and internal energy > 0; never throws.
bool is_physical(const Vec4& w);

} // namespace gks
