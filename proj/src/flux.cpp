#include "gks/flux.hpp"

#include <cmath>

#include "gks/errors.hpp"

namespace gks {

CollisionModel CollisionModel::from_gas(const GasModel& gas)
{
  CollisionModel model;
  model.mode = gas.viscous() ? CollisionMode::viscous : CollisionMode::inviscid;
  model.eps = gas.tau_eps;
  model.c_jump = gas.tau_c;
  return model;
}

double collision_time(double p_left, double p_right, double dt, const GasModel& gas, const CollisionModel& model,
                      double p_interface)
{
  const double jump = model.c_jump * std::abs((p_left - p_right) / (p_left + p_right)) * dt;
  if (model.mode == CollisionMode::viscous) return *gas.mu / p_interface + jump;
  return model.eps * dt + jump;
}

double chapman_enskog_time(double tau, const GasModel& gas, const CollisionModel& model, double p_interface)
{
  if (!model.split_tau) return tau;
  if (model.mode == CollisionMode::viscous) return *gas.mu / p_interface;
  return 0.0;
}

namespace {

struct Maxwellian
{
  Primitive prim;
  MomentTable table;
  MomentSystem system;

  Maxwellian(const Primitive& p, const GasModel& gas) : prim(p), table(build_moment_table(p, gas)), system(p, gas) {}
};

struct SideSlopes
{
  MicroSlopes a1, a2, A;
};

SideSlopes side_slopes(const Maxwellian& m, const Vec4& dn, const Vec4& dt)
{
  SideSlopes s;
  s.a1 = solve_microslopes(m.system, m.prim.rho, dn);
  s.a2 = solve_microslopes(m.system, m.prim.rho, dt);
  s.A = solve_time_slope(m.system, m.table, s.a1, s.a2);
  return s;
}

Primitive merged_state(const Maxwellian& l, const Maxwellian& r, const GasModel& gas)
{
  const Vec4 w0 = l.prim.rho * psi_moment(l.table, Half::pos, 0, 0) + r.prim.rho * psi_moment(r.table, Half::neg, 0, 0);
  return primitive_from_conserved(w0, gas);
}

Vec4 merged_derivative(const Maxwellian& l, const MicroSlopes& al, const Maxwellian& r, const MicroSlopes& ar)
{
  return l.prim.rho * psi_moment(l.table, Half::pos, 0, 0, al) + r.prim.rho * psi_moment(r.table, Half::neg, 0, 0, ar);
}

// Moments of (u^nu) x {g, (a1 u + a2 v) g, A g} over one half (or all) of u.
MomentTerms terms(const Maxwellian& m, Half half, int nu, const MicroSlopes& a1, const MicroSlopes& a2,
                  const MicroSlopes& A)
{
  const double rho = m.prim.rho;
  MomentTerms t;
  t.g = rho * psi_moment(m.table, half, nu, 0);
  t.a = rho * (psi_moment(m.table, half, nu + 1, 0, a1) + psi_moment(m.table, half, nu, 1, a2));
  t.A = rho * psi_moment(m.table, half, nu, 0, A);
  return t;
}

MomentTerms sum(const MomentTerms& x, const MomentTerms& y) { return {x.g + y.g, x.a + y.a, x.A + y.A}; }

FluxAssembly finish(const Maxwellian& l, const SideSlopes& sl, const Maxwellian& r, const SideSlopes& sr,
                    const Maxwellian& m0, const EquilibriumState& eq, double tau, double tau_ce, bool with_state)
{
  FluxAssembly fa;
  fa.eq = eq;
  fa.left = l.prim;
  fa.right = r.prim;
  fa.a1_left = sl.a1;
  fa.a2_left = sl.a2;
  fa.A_left = sl.A;
  fa.a1_right = sr.a1;
  fa.a2_right = sr.a2;
  fa.A_right = sr.A;
  fa.tau = tau;
  fa.tau_ce = tau_ce;

  fa.flux_eq = terms(m0, Half::full, 1, eq.a1, eq.a2, eq.A);
  fa.flux_free = sum(terms(l, Half::pos, 1, sl.a1, sl.a2, sl.A), terms(r, Half::neg, 1, sr.a1, sr.a2, sr.A));
  fa.has_state = with_state;
  if (with_state) {
    fa.state_eq = terms(m0, Half::full, 0, eq.a1, eq.a2, eq.A);
    fa.state_free = sum(terms(l, Half::pos, 0, sl.a1, sl.a2, sl.A), terms(r, Half::neg, 0, sr.a1, sr.a2, sr.A));
  }
  return fa;
}

EquilibriumState equilibrium(const Maxwellian& l, const SideSlopes& sl, const Maxwellian& r, const SideSlopes& sr,
                             const Maxwellian& m0, const Vec4& dw0_n)
{
  EquilibriumState eq;
  eq.w0 = m0.prim;
  eq.dw0_n = dw0_n;
  eq.dw0_t = merged_derivative(l, sl.a2, r, sr.a2);
  eq.a1 = solve_microslopes(m0.system, m0.prim.rho, eq.dw0_n);
  eq.a2 = solve_microslopes(m0.system, m0.prim.rho, eq.dw0_t);
  eq.A = solve_time_slope(m0.system, m0.table, eq.a1, eq.a2);
  return eq;
}

} // namespace

EquilibriumState merge_equilibrium(const SideState& left, const SideState& right, const Vec4& dw0_n,
                                   const GasModel& gas)
{
  const Maxwellian l(left.prim, gas);
  const Maxwellian r(right.prim, gas);
  const SideSlopes sl = side_slopes(l, left.dn, left.dt);
  const SideSlopes sr = side_slopes(r, right.dn, right.dt);
  const Maxwellian m0(merged_state(l, r, gas), gas);
  return equilibrium(l, sl, r, sr, m0, dw0_n);
}

FluxAssembly assemble_flux(const SideState& left, const SideState& right, const Vec4& dw0_n, const GasModel& gas,
                           const CollisionModel& model, double dt, bool with_state)
{
  const Maxwellian l(left.prim, gas);
  const Maxwellian r(right.prim, gas);
  const SideSlopes sl = side_slopes(l, left.dn, left.dt);
  const SideSlopes sr = side_slopes(r, right.dn, right.dt);
  const Maxwellian m0(merged_state(l, r, gas), gas);
  const EquilibriumState eq = equilibrium(l, sl, r, sr, m0, dw0_n);
  const double tau = collision_time(left.prim.p, right.prim.p, dt, gas, model, m0.prim.p);
  const double tau_ce = chapman_enskog_time(tau, gas, model, m0.prim.p);
  return finish(l, sl, r, sr, m0, eq, tau, tau_ce, with_state);
}

FluxAssembly assemble_flux(const InterfaceStates& s, const GasModel& gas, double tau, double tau_ce)
{
  const Maxwellian l(s.left.prim, gas);
  const Maxwellian r(s.right.prim, gas);
  const SideSlopes sl = side_slopes(l, s.left.dn, s.left.dt);
  const SideSlopes sr = side_slopes(r, s.right.dn, s.right.dt);
  const Maxwellian m0(s.w0, gas);
  EquilibriumState eq;
  eq.w0 = s.w0;
  eq.dw0_n = s.dw0_n;
  eq.dw0_t = s.dw0_t;
  eq.a1 = solve_microslopes(m0.system, s.w0.rho, s.dw0_n);
  eq.a2 = solve_microslopes(m0.system, s.w0.rho, s.dw0_t);
  eq.A = solve_time_slope(m0.system, m0.table, eq.a1, eq.a2);
  return finish(l, sl, r, sr, m0, eq, tau, tau_ce, true);
}

TimeWeights time_weights(double tau, double tau_ce, double delta)
{
  TimeWeights t;
  if (!(tau > 0.0)) {
    // tau -> 0 limit: pure equilibrium (Lax-Wendroff) flux.
    t.g0 = delta;
    t.a0 = -tau_ce * delta;
    t.A0 = 0.5 * delta * delta - tau_ce * delta;
    return t;
  }
  const double x = delta / tau;
  const double eta = std::exp(-x);
  const double one_minus_eta = -std::expm1(-x);
  const double te = tau * one_minus_eta;
  // (1 - e^{-t/tau}) g0
  t.g0 = delta - te;
  // ((t + tau_ce) e^{-t/tau} - tau_ce) (a1 u + a2 v) g0
  t.a0 = tau * te - tau * delta * eta + tau_ce * te - tau_ce * delta;
  // (t - tau_ce + tau_ce e^{-t/tau}) A g0
  t.A0 = 0.5 * delta * delta - tau_ce * delta + tau_ce * te;
  // e^{-t/tau} g_{l,r}
  t.g = te;
  // -(t + tau_ce) e^{-t/tau} (a1 u + a2 v) g_{l,r}
  t.a = -(tau * te - tau * delta * eta) - tau_ce * te;
  // -tau_ce e^{-t/tau} A g_{l,r}
  t.A = -tau_ce * te;
  return t;
}

namespace {

Vec4 combine(const TimeWeights& t, const MomentTerms& eq, const MomentTerms& free)
{
  Vec4 r = t.g0 * eq.g;
  r += t.a0 * eq.a;
  r += t.A0 * eq.A;
  r += t.g * free.g;
  r += t.a * free.a;
  r += t.A * free.A;
  return r;
}

} // namespace

TimeIntegratedFlux time_integrated_flux(const FluxAssembly& fa, double delta)
{
  const TimeWeights t = time_weights(fa.tau, fa.tau_ce, delta);
  if (!fa.has_state) return {combine(t, fa.flux_eq, fa.flux_free), Vec4{}};
  return {combine(t, fa.flux_eq, fa.flux_free), combine(t, fa.state_eq, fa.state_free)};
}

TimeIntegratedFlux prandtl_correction(const TimeIntegratedFlux& flux, const FluxAssembly& fa, double prandtl)
{
  if (prandtl == 1.0) return flux;
  if (!fa.has_state) throw ConfigError("Prandtl correction needs the state moments");
  const double U = fa.eq.w0.u;
  const double V = fa.eq.w0.v;
  const Vec4& f = flux.f;
  const Vec4& w = flux.w;
  const double q = (f[3] - U * w[3]) - (U * (f[1] - U * w[1]) + V * (f[2] - U * w[2])) +
                   0.5 * (U * U + V * V) * (f[0] - U * w[0]);
  TimeIntegratedFlux out = flux;
  out.f[3] += (1.0 / prandtl - 1.0) * q;
  return out;
}

} // namespace gks
