#include "gks/gas.hpp"

#include <cmath>
#include <sstream>

#include "gks/errors.hpp"

namespace gks {

GasModel GasModel::ideal(double gamma, Dimension dim)
{
  GasModel gas;
  gas.gamma = gamma;
  gas.dim = dim;
  gas.K = dim == Dimension::two ? (4.0 - 2.0 * gamma) / (gamma - 1.0) : (3.0 - gamma) / (gamma - 1.0);
  gas.validate();
  return gas;
}

void GasModel::validate() const
{
  if (!(gamma > 1.0 && gamma <= 5.0 / 3.0 + 1e-12)) throw ConfigError("gamma must lie in (1, 5/3]");
  if (!(prandtl > 0.0)) throw ConfigError("prandtl must be positive");
  if (tau_eps < 0.0 || tau_c < 0.0) throw ConfigError("collision-time constants must be non-negative");
  if (mu && !(*mu > 0.0)) throw ConfigError("viscosity must be positive when present");
  // 1D keeps v as an internal degree, so the xi part needs K >= 1 there.
  if (xi_dof() < 0.0) throw ConfigError("internal degrees of freedom must be non-negative");
}

Primitive Primitive::from_rho_u_v_p(double rho, double u, double v, double p)
{
  return {rho, u, v, p, rho / (2.0 * p)};
}

bool is_physical(const Vec4& w)
{
  if (!(w[0] > 0.0)) return false;
  const double eint = w[3] - 0.5 * (w[1] * w[1] + w[2] * w[2]) / w[0];
  return eint > 0.0 && std::isfinite(eint);
}

Primitive primitive_from_conserved(const Vec4& w, const GasModel& gas)
{
  if (!is_physical(w)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-physical conserved state (" << w[0] << ", " << w[1] << ", " << w[2] << ", " << w[3] << ")";
    throw NonPhysicalState(msg.str());
  }
  const double u = w[1] / w[0];
  const double v = w[2] / w[0];
  const double p = (gas.gamma - 1.0) * (w[3] - 0.5 * w[0] * (u * u + v * v));
  return {w[0], u, v, p, w[0] / (2.0 * p)};
}

Primitive primitive_from_conserved(const Conserved& w, const GasModel& gas)
{
  return primitive_from_conserved(w.vec(), gas);
}

Conserved conserved_from_primitive(const Primitive& prim, const GasModel& gas)
{
  const double rho_e = prim.p / (gas.gamma - 1.0) + 0.5 * prim.rho * (prim.u * prim.u + prim.v * prim.v);
  return {prim.rho, prim.rho * prim.u, prim.rho * prim.v, rho_e};
}

Vec4 euler_flux_x(const Primitive& prim, const GasModel& gas)
{
  const Conserved w = conserved_from_primitive(prim, gas);
  return {w.rho_u, w.rho_u * prim.u + prim.p, w.rho_u * prim.v, (w.rho_e + prim.p) * prim.u};
}

double sound_speed(const Primitive& prim, const GasModel& gas) { return std::sqrt(gas.gamma * prim.p / prim.rho); }

} // namespace gks
