#pragma once

#include "gks/gas.hpp"
#include "gks/grid.hpp"
#include "gks/vec4.hpp"

namespace gks {

/// Flux and its first time derivative at the start of a window.
struct FluxPair
{
  Vec4 f0{};
  Vec4 ft{};
};

struct FluxTriple
{
  Vec4 f0{};
  Vec4 ft{};
  Vec4 ftt{};
};

/// From time integrals over [0, dt/2] and [0, dt] of a flux linear in t.
FluxPair linear_flux_coefficients(const Vec4& f_half, const Vec4& f_full, double dt);

/// From time integrals over [0, dt/3], [0, 2dt/3], [0, dt] of a flux
/// quadratic in t.
FluxTriple quadratic_flux_coefficients(const Vec4& f_third, const Vec4& f_two_thirds, const Vec4& f_full, double dt);

/// Effective flux of the two-stage update over [t_n, t_n + dt].
inline Vec4 two_stage_flux(const FluxPair& fn, const FluxPair& fstar, double dt)
{
  return fn.f0 + (dt / 6.0) * (fn.ft + 2.0 * fstar.ft);
}

/// Two-stage fourth-order step of dw/dt = L(w) given L and its time
/// derivative Lt = L_w L. W is any vector-like type with + and scalar *.
template <class W, class Op, class OpT>
W s2o4_ode_step(const Op& L, const OpT& Lt, const W& w, double dt)
{
  const W star = w + (0.5 * dt) * L(w) + (dt * dt / 8.0) * Lt(w);
  return w + dt * L(w) + (dt * dt / 6.0) * (Lt(w) + 2.0 * Lt(star));
}

struct S2O5Coefficients
{
  double A = 2.0 / 5.0;
  double B0 = 1.0, B1 = 0.0;
  double C0 = 1.0, C1 = 0.0;
  double D0 = 3.0 / 8.0, D1 = 5.0 / 8.0;
};

/// Two-stage fifth-order step using L, Lt and Ltt.
template <class W, class Op, class OpT, class OpTT>
W s2o5_ode_step(const Op& L, const OpT& Lt, const OpTT& Ltt, const W& w, double dt, const S2O5Coefficients& k = {})
{
  const double a = k.A * dt;
  const W l0 = L(w), g0 = Lt(w), h0 = Ltt(w);
  const W star = w + a * l0 + (0.5 * a * a) * g0 + (a * a * a / 6.0) * h0;
  const W l1 = L(star), g1 = Lt(star), h1 = Ltt(star);
  return w + dt * (k.B0 * l0 + k.B1 * l1) + (0.5 * dt * dt) * (k.C0 * g0 + k.C1 * g1) +
         (dt * dt * dt / 6.0) * (k.D0 * h0 + k.D1 * h1);
}

struct TimeStepLimits
{
  double convective = 0.0;
  /// Infinite when the gas is inviscid or the bound is disabled.
  double viscous = 0.0;
  double dt() const { return convective < viscous ? convective : viscous; }
  bool viscous_active() const { return viscous < convective; }
};

/// CFL min over interior cells of dx/(|U|+c), dy/(|V|+c); viscous runs add
/// CFL min(dx^2, dy^2) rho / (4 mu). Throws NonPhysicalState.
TimeStepLimits cfl_limits(const Field& field, const GasModel& gas, double cfl, bool viscous_bound = true);
double cfl_time_step(const Field& field, const GasModel& gas, double cfl, bool viscous_bound = true);

} // namespace gks
