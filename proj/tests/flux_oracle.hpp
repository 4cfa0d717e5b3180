#pragma once

// Time-dependent interface distribution integrated by brute force: every
// microslope, the merged state and the time weights come from quadrature.

#include "gks/interface_states.hpp"
#include "quadrature_oracle.hpp"

namespace oracle {

struct FluxOracleResult
{
  gks::Primitive w0;
  gks::Vec4 dw0_t{};
  gks::Vec4 flux{};
  gks::Vec4 state{};
};

namespace detail {

struct Side
{
  VelocityGrid full, half;
  gks::Vec4 a1{}, a2{}, A{};
};

inline gks::Vec4 time_slope(const VelocityGrid& g, const gks::Vec4& a1, const gks::Vec4& a2)
{
  const gks::Vec4 rhs = moment(g, [&](double u, double v, double x2) {
    const gks::Vec4 p = psi(u, v, x2);
    return -(dot(a1, p) * u + dot(a2, p) * v) * p;
  });
  return microslopes(g, rhs);
}

inline Side side(const gks::SideState& s, double dof, Part part)
{
  Side out;
  out.full = velocity_grid(s.prim, dof, Part::full);
  out.half = velocity_grid(s.prim, dof, part);
  out.a1 = microslopes(out.full, (1.0 / s.prim.rho) * s.dn);
  out.a2 = microslopes(out.full, (1.0 / s.prim.rho) * s.dt);
  out.A = time_slope(out.full, out.a1, out.a2);
  return out;
}

// Time integral over [0, delta] of a weight function.
inline double time_integral(const std::function<double(double)>& w, double delta)
{
  return integrate(w, 0.0, delta, 8, 20);
}

} // namespace detail

/// tau in the exponentials, tau_ce on the Chapman-Enskog terms (equal for the
/// single-tau distribution).
inline FluxOracleResult interface_flux(const gks::SideState& left, const gks::SideState& right, const gks::Vec4& dw0_n,
                                       double gamma, double dof, double tau, double tau_ce, double delta)
{
  using namespace detail;
  const Side l = side(left, dof, Part::pos);
  const Side r = side(right, dof, Part::neg);

  FluxOracleResult out;
  const gks::Vec4 w0 = left.prim.rho * moment(l.half, [](double u, double v, double x2) { return psi(u, v, x2); }) +
                       right.prim.rho * moment(r.half, [](double u, double v, double x2) { return psi(u, v, x2); });
  const double rho0 = w0[0];
  const double u0 = w0[1] / rho0, v0 = w0[2] / rho0;
  const double p0 = (gamma - 1.0) * (w0[3] - 0.5 * rho0 * (u0 * u0 + v0 * v0));
  out.w0 = gks::Primitive::from_rho_u_v_p(rho0, u0, v0, p0);
  out.dw0_t = left.prim.rho * moment(l.half, [&](double u, double v, double x2) {
                const gks::Vec4 p = psi(u, v, x2);
                return dot(l.a2, p) * p;
              }) +
              right.prim.rho * moment(r.half, [&](double u, double v, double x2) {
                const gks::Vec4 p = psi(u, v, x2);
                return dot(r.a2, p) * p;
              });

  const VelocityGrid g0 = velocity_grid(out.w0, dof, Part::full);
  const gks::Vec4 b1 = microslopes(g0, (1.0 / rho0) * dw0_n);
  const gks::Vec4 b2 = microslopes(g0, (1.0 / rho0) * out.dw0_t);
  const gks::Vec4 B = time_slope(g0, b1, b2);

  auto ex = [&](double t) { return tau > 0.0 ? std::exp(-t / tau) : 0.0; };
  // f = w1 g0 + w2 (b1 u + b2 v) g0 + w3 B g0
  //   + e [ (1 - (t + tau_ce)(a1 u + a2 v) - tau_ce A) g_k ]  on each half
  const double W1 = time_integral([&](double t) { return 1.0 - ex(t); }, delta);
  const double W2 = time_integral([&](double t) { return (t + tau_ce) * ex(t) - tau_ce; }, delta);
  const double W3 = time_integral([&](double t) { return t - tau_ce + tau_ce * ex(t); }, delta);
  const double E0 = time_integral(ex, delta);
  const double E1 = time_integral([&](double t) { return (t + tau_ce) * ex(t); }, delta);
  const double E2 = time_integral([&](double t) { return tau_ce * ex(t); }, delta);

  for (int which = 0; which < 2; ++which) {
    auto weight = [&](double u) { return which == 0 ? u : 1.0; };
    const gks::Vec4 eq = rho0 * moment(g0, [&](double u, double v, double x2) {
                           const gks::Vec4 p = psi(u, v, x2);
                           return weight(u) * (W1 + W2 * (dot(b1, p) * u + dot(b2, p) * v) + W3 * dot(B, p)) * p;
                         });
    auto free = [&](const Side& s, double rho) {
      return rho * moment(s.half, [&](double u, double v, double x2) {
               const gks::Vec4 p = psi(u, v, x2);
               return weight(u) * (E0 - E1 * (dot(s.a1, p) * u + dot(s.a2, p) * v) - E2 * dot(s.A, p)) * p;
             });
    };
    const gks::Vec4 total = eq + free(l, left.prim.rho) + free(r, right.prim.rho);
    if (which == 0) out.flux = total;
    else out.state = total;
  }
  return out;
}

} // namespace oracle
