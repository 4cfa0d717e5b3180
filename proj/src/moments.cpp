#include "gks/moments.hpp"

#include <cmath>
#include <numbers>

#include "gks/errors.hpp"

namespace gks {

namespace {

template <std::size_t N>
void fill_recursion(std::array<double, N>& m, double mean, double lambda)
{
  const double half_over_lambda = 0.5 / lambda;
  for (std::size_t n = 0; n + 2 < N; ++n) {
    m[n + 2] = mean * m[n + 1] + double(n + 1) * half_over_lambda * m[n];
  }
}

const std::array<double, max_moment_order + 1>& u_moments(const MomentTable& m, Half half)
{
  switch (half) {
    case Half::pos: return m.pos_u;
    case Half::neg: return m.neg_u;
    default: return m.full_u;
  }
}

} // namespace

MomentTable build_moment_table(const Primitive& prim, const GasModel& gas)
{
  static_assert(max_moment_order >= 6, "second-order flux needs moments up to u^6");
  MomentTable m;
  const double lambda = prim.lambda;
  const double U = prim.u;
  const double V = prim.v;

  m.full_u[0] = 1.0;
  m.full_u[1] = U;
  fill_recursion(m.full_u, U, lambda);

  m.full_v[0] = 1.0;
  m.full_v[1] = V;
  fill_recursion(m.full_v, V, lambda);

  const double sl = std::sqrt(lambda);
  const double tail = 0.5 * std::exp(-lambda * U * U) / std::sqrt(std::numbers::pi * lambda);
  // One erfc for both halves, always of the smaller tail.
  const double small = 0.5 * std::erfc(sl * std::abs(U));
  m.pos_u[0] = U >= 0.0 ? 1.0 - small : small;
  m.pos_u[1] = U * m.pos_u[0] + tail;
  fill_recursion(m.pos_u, U, lambda);
  m.neg_u[0] = U >= 0.0 ? small : 1.0 - small;
  m.neg_u[1] = U * m.neg_u[0] - tail;
  fill_recursion(m.neg_u, U, lambda);

  const double K = gas.xi_dof();
  m.xi[0] = 1.0;
  m.xi[1] = 0.5 * K / lambda;
  m.xi[2] = 0.25 * K * (K + 2.0) / (lambda * lambda);
  return m;
}

Vec4 psi_moment(const MomentTable& m, Half half, int nu, int nv, const MicroSlopes& a)
{
  const double* U = u_moments(m, half).data() + nu;
  const double* V = m.full_v.data() + nv;
  const double x1 = m.xi[1], x2 = m.xi[2];
  const double u0 = U[0], u1 = U[1], u2 = U[2], u3 = U[3], u4 = U[4];
  const double v0 = V[0], v1 = V[1], v2 = V[2], v3 = V[3], v4 = V[4];
  const double g00 = u0 * v0, g10 = u1 * v0, g01 = u0 * v1, g20 = u2 * v0, g11 = u1 * v1, g02 = u0 * v2;
  // ||w||^2 = u^2 + v^2 + xi^2 weighted by u^a v^b
  const double e00 = g20 + g02 + g00 * x1;
  const double e10 = u3 * v0 + u1 * v2 + g10 * x1;
  const double e01 = u2 * v1 + u0 * v3 + g01 * x1;
  const double e4 = u4 * v0 + u0 * v4 + g00 * x2 + 2.0 * (u2 * v2 + (g20 + g02) * x1);
  const auto& c = a.c;
  return {c[0] * g00 + c[1] * g10 + c[2] * g01 + 0.5 * c[3] * e00,
          c[0] * g10 + c[1] * g20 + c[2] * g11 + 0.5 * c[3] * e10,
          c[0] * g01 + c[1] * g11 + c[2] * g02 + 0.5 * c[3] * e01,
          0.5 * (c[0] * e00 + c[1] * e10 + c[2] * e01) + 0.25 * c[3] * e4};
}

Vec4 psi_moment(const MomentTable& m, Half half, int nu, int nv)
{
  const auto& U = u_moments(m, half);
  const auto& V = m.full_v;
  const auto& X = m.xi;
  const int i = nu;
  const int j = nv;
  return {U[i] * V[j], U[i + 1] * V[j], U[i] * V[j + 1],
          0.5 * (U[i + 2] * V[j] + U[i] * V[j + 2] + U[i] * V[j] * X[1])};
}

MomentSystem::MomentSystem(const Primitive& prim, const GasModel& gas)
    : u_(prim.u), v_(prim.v), lambda_(prim.lambda), dof_(gas.xi_dof() + 2.0)
{
  if (!(lambda_ > 0.0) || !std::isfinite(lambda_) || !std::isfinite(u_) || !std::isfinite(v_))
    throw SingularMomentSystem("moment matrix needs a finite positive lambda");
}

Vec4 MomentSystem::solve(const Vec4& r) const
{
  const double U = u_, V = v_, L = lambda_;
  const double q2 = U * U + V * V;
  const double d = 2.0 * r[3] - 2.0 * U * r[1] - 2.0 * V * r[2] + (q2 - 0.5 * dof_ / L) * r[0];
  Vec4 c;
  c[3] = 4.0 * L * L / dof_ * d;
  c[2] = 2.0 * L * (r[2] - V * r[0]) - V * c[3];
  c[1] = 2.0 * L * (r[1] - U * r[0]) - U * c[3];
  c[0] = r[0] - U * c[1] - V * c[2] - 0.5 * c[3] * (q2 + 0.5 * dof_ / L);
  return c;
}

MicroSlopes solve_microslopes(const MomentSystem& system, double rho, const Vec4& dw)
{
  return {system.solve((1.0 / rho) * dw)};
}

MicroSlopes solve_microslopes(const Primitive& prim, const GasModel& gas, const Vec4& dw)
{
  const MomentSystem system(prim, gas);
  return solve_microslopes(system, prim.rho, dw);
}

MicroSlopes solve_time_slope(const MomentSystem& system, const MomentTable& m, const MicroSlopes& ax,
                             const MicroSlopes& ay)
{
  const Vec4 rhs = psi_moment(m, Half::full, 1, 0, ax) + psi_moment(m, Half::full, 0, 1, ay);
  return {system.solve(-rhs)};
}

MicroSlopes solve_time_slope(const Primitive& prim, const GasModel& gas, const MicroSlopes& ax, const MicroSlopes& ay)
{
  const MomentTable m = build_moment_table(prim, gas);
  const MomentSystem system(prim, gas);
  return solve_time_slope(system, m, ax, ay);
}

} // namespace gks
