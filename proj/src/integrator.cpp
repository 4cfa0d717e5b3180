#include "gks/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gks {

FluxPair linear_flux_coefficients(const Vec4& f_half, const Vec4& f_full, double dt)
{
  FluxPair p;
  p.f0 = (1.0 / dt) * (4.0 * f_half - f_full);
  p.ft = (4.0 / (dt * dt)) * (f_full - 2.0 * f_half);
  return p;
}

FluxTriple quadratic_flux_coefficients(const Vec4& f_third, const Vec4& f_two_thirds, const Vec4& f_full, double dt)
{
  // Inverse of the moment matrix of (1, t, t^2/2) over the three windows.
  FluxTriple r;
  r.f0 = (1.0 / dt) * (f_full - 4.5 * f_two_thirds + 9.0 * f_third);
  r.ft = (1.0 / (dt * dt)) * (-9.0 * f_full + 36.0 * f_two_thirds - 45.0 * f_third);
  r.ftt = (1.0 / (dt * dt * dt)) * (27.0 * f_full - 81.0 * f_two_thirds + 81.0 * f_third);
  return r;
}

TimeStepLimits cfl_limits(const Field& field, const GasModel& gas, double cfl, bool viscous_bound)
{
  const StructuredGrid& g = field.grid();
  double conv = std::numeric_limits<double>::infinity();
  double rho_min = std::numeric_limits<double>::infinity();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const Primitive p = primitive_from_conserved(field(i, j), gas);
      const double c = sound_speed(p, gas);
      conv = std::min(conv, g.dx / (std::abs(p.u) + c));
      if (g.two_d()) conv = std::min(conv, g.dy / (std::abs(p.v) + c));
      rho_min = std::min(rho_min, p.rho);
    }
  }
  TimeStepLimits lim;
  lim.convective = cfl * conv;
  lim.viscous = std::numeric_limits<double>::infinity();
  if (viscous_bound && gas.viscous() && *gas.mu > 0.0) {
    const double h = g.two_d() ? std::min(g.dx, g.dy) : g.dx;
    lim.viscous = cfl * h * h * rho_min / (4.0 * *gas.mu);
  }
  return lim;
}

double cfl_time_step(const Field& field, const GasModel& gas, double cfl, bool viscous_bound)
{
  return cfl_limits(field, gas, cfl, viscous_bound).dt();
}

} // namespace gks
