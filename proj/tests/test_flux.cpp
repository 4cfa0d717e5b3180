#include <random>

#include "catch_amalgamated.hpp"
#include "flux_oracle.hpp"
#include "gks/errors.hpp"
#include "gks/flux.hpp"

using namespace gks;
using Catch::Approx;

namespace {

GasModel gas2d() { return GasModel::ideal(1.4, Dimension::two); }

Primitive prim(double rho, double u, double v, double p) { return Primitive::from_rho_u_v_p(rho, u, v, p); }

SideState side(const Primitive& p, const Vec4& dn = {}, const Vec4& dt = {}) { return {p, dn, dt}; }

double worst_rel(const Vec4& a, const Vec4& ref)
{
  double w = 0.0;
  for (int k = 0; k < 4; ++k) w = std::max(w, std::abs(a[k] - ref[k]) / std::abs(ref[k]));
  return w;
}

Vec4 mirror(const Vec4& w) { return {w[0], -w[1], w[2], w[3]}; }

Primitive mirror(const Primitive& p) { return prim(p.rho, -p.u, p.v, p.p); }

} // namespace

TEST_CASE("collision time")
{
  const GasModel g = gas2d();
  CollisionModel inv;
  CHECK(collision_time(1.0, 1.0, 1e-3, g, inv, 1.0) == Approx(5e-5).epsilon(1e-14));
  CHECK(collision_time(2.0, 1.0, 1e-3, g, inv, 1.5) == Approx((0.05 + 1.0 / 3.0) * 1e-3).epsilon(1e-14));

  GasModel gv = g;
  gv.mu = 1e-4;
  CollisionModel vis = CollisionModel::from_gas(gv);
  REQUIRE(vis.mode == CollisionMode::viscous);
  CHECK(collision_time(1.0, 1.0, 1e-3, gv, vis, 1.0) == Approx(1e-4).epsilon(1e-14));

  CHECK(chapman_enskog_time(5e-5, g, inv, 1.0) == 0.0);
  CHECK(chapman_enskog_time(3e-4, gv, vis, 2.0) == Approx(5e-5).epsilon(1e-14));
  inv.split_tau = false;
  CHECK(chapman_enskog_time(5e-5, g, inv, 1.0) == 5e-5);
}

TEST_CASE("time weights")
{
  SECTION("tau -> 0 is continuous")
  {
    const TimeWeights z = time_weights(0.0, 0.0, 0.3);
    const TimeWeights s = time_weights(1e-13, 0.0, 0.3);
    CHECK(s.g0 == Approx(z.g0).margin(1e-12));
    CHECK(s.a0 == Approx(z.a0).margin(1e-12));
    CHECK(s.A0 == Approx(z.A0).margin(1e-12));
    CHECK(std::abs(s.g) < 1e-12);
    CHECK(std::abs(s.a) < 1e-12);
  }
  SECTION("closed forms match quadrature")
  {
    for (double tau : {1e-3, 0.05, 0.4})
      for (double tc : {0.0, tau, 0.3 * tau}) {
        const double d = 0.2;
        const TimeWeights t = time_weights(tau, tc, d);
        auto e = [&](double s) { return std::exp(-s / tau); };
        auto q = [&](auto f) { return oracle::integrate(f, 0.0, d, 8, 20); };
        CHECK(t.g0 == Approx(q([&](double s) { return 1.0 - e(s); })).epsilon(1e-12));
        CHECK(t.a0 == Approx(q([&](double s) { return (s + tc) * e(s) - tc; })).epsilon(1e-11).margin(1e-15));
        CHECK(t.A0 == Approx(q([&](double s) { return s - tc + tc * e(s); })).epsilon(1e-12));
        CHECK(t.g == Approx(q(e)).epsilon(1e-12));
        CHECK(t.a == Approx(q([&](double s) { return -(s + tc) * e(s); })).epsilon(1e-12));
        CHECK(t.A == Approx(q([&](double s) { return -tc * e(s); })).epsilon(1e-12).margin(1e-300));
      }
  }
}

TEST_CASE("merged equilibrium state")
{
  const GasModel g = gas2d();
  SECTION("equal sides recombine")
  {
    const Primitive p = prim(1.3, 0.4, -0.2, 0.8);
    const EquilibriumState e = merge_equilibrium(side(p), side(p), Vec4{}, g);
    CHECK(e.w0.rho == Approx(p.rho).epsilon(1e-14));
    CHECK(e.w0.u == Approx(p.u).epsilon(1e-14));
    CHECK(e.w0.v == Approx(p.v).epsilon(1e-14));
    CHECK(e.w0.p == Approx(p.p).epsilon(1e-13));
  }
  SECTION("opposite velocities cancel")
  {
    const EquilibriumState e = merge_equilibrium(side(prim(1.0, 0.7, 0.0, 1.0)), side(prim(1.0, -0.7, 0.0, 1.0)),
                                                 Vec4{}, g);
    CHECK(std::abs(e.w0.u) < 1e-15);
    CHECK(e.w0.rho > 1.0);
  }
  SECTION("Sod diaphragm against half-moment quadrature")
  {
    const SideState l = side(prim(1.0, 0.0, 0.0, 1.0), {}, {0.1, 0.0, 0.2, -0.1});
    const SideState r = side(prim(0.125, 0.0, 0.0, 0.1), {}, {0.0, 0.05, 0.0, 0.02});
    const EquilibriumState e = merge_equilibrium(l, r, Vec4{}, g);
    const auto o = oracle::interface_flux(l, r, Vec4{}, g.gamma, g.xi_dof(), 1e-4, 1e-4, 1e-3);
    CHECK(e.w0.rho == Approx(o.w0.rho).epsilon(1e-10));
    CHECK(e.w0.u == Approx(o.w0.u).epsilon(1e-10));
    CHECK(e.w0.p == Approx(o.w0.p).epsilon(1e-10));
    for (int k = 0; k < 4; ++k) CHECK(e.dw0_t[k] == Approx(o.dw0_t[k]).epsilon(1e-10).margin(1e-12));
  }
}

TEST_CASE("uniform state gives the Euler flux")
{
  const GasModel g = gas2d();
  const Primitive p = prim(1.2, 0.6, -0.3, 0.9);
  const Vec4 euler = euler_flux_x(p, g);
  for (double tau : {0.0, 1e-5, 1e-3, 0.1})
    for (double delta : {1e-3, 0.02, 0.5}) {
      InterfaceStates s{side(p), side(p), p, {}, {}};
      const FluxAssembly fa = assemble_flux(s, g, tau, tau);
      const Vec4 f = time_integrated_flux(fa, delta).f;
      for (int k = 0; k < 4; ++k) CHECK(f[k] == Approx(delta * euler[k]).epsilon(1e-12).margin(1e-15));
      const Vec4 c = prandtl_correction(time_integrated_flux(fa, delta), fa, 0.73).f;
      CHECK(c[3] == Approx(f[3]).epsilon(1e-12));
    }
}

TEST_CASE("mirror symmetric states carry no mass")
{
  const GasModel g = gas2d();
  CollisionModel m;
  const SideState l = side(prim(1.0, 0.5, 0.0, 1.0));
  const SideState r = side(prim(1.0, -0.5, 0.0, 1.0));
  const FluxAssembly fa = assemble_flux(l, r, Vec4{}, g, m, 1e-3);
  const Vec4 f = time_integrated_flux(fa, 1e-3).f;
  CHECK(std::abs(f[0]) < 1e-17);
  CHECK(f[1] > 0.0);
}

TEST_CASE("mirroring in x negates the odd flux components")
{
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const GasModel g = gas2d();
  CollisionModel m;
  for (int t = 0; t < 10; ++t) {
    const SideState l = side(prim(1.0 + 0.5 * d(rng), d(rng), d(rng), 1.0 + 0.5 * d(rng)),
                             {d(rng), d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng), d(rng)});
    const SideState r = side(prim(1.0 + 0.5 * d(rng), d(rng), d(rng), 1.0 + 0.5 * d(rng)),
                             {d(rng), d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng), d(rng)});
    const Vec4 dw0 = {d(rng), d(rng), d(rng), d(rng)};
    const Vec4 f = time_integrated_flux(assemble_flux(l, r, dw0, g, m, 0.01), 0.01).f;
    const SideState lm = side(mirror(r.prim), -mirror(r.dn), mirror(r.dt));
    const SideState rm = side(mirror(l.prim), -mirror(l.dn), mirror(l.dt));
    const Vec4 fm = time_integrated_flux(assemble_flux(lm, rm, -mirror(dw0), g, m, 0.01), 0.01).f;
    CHECK(fm[0] == Approx(-f[0]).epsilon(1e-11).margin(1e-15));
    CHECK(fm[1] == Approx(f[1]).epsilon(1e-11));
    CHECK(fm[2] == Approx(-f[2]).epsilon(1e-11).margin(1e-15));
    CHECK(fm[3] == Approx(-f[3]).epsilon(1e-11).margin(1e-15));
  }
}

TEST_CASE("Sod diaphragm flux against the quadrature oracle")
{
  const GasModel g = gas2d();
  const SideState l = side(prim(1.0, 0.0, 0.0, 1.0), {-0.4, 0.1, 0.0, -0.9});
  const SideState r = side(prim(0.125, 0.0, 0.0, 0.1), {-0.05, 0.02, 0.0, -0.1});
  const Vec4 dw0 = {-3.5, 0.0, 0.0, -9.0};
  const EquilibriumState e = merge_equilibrium(l, r, dw0, g);
  InterfaceStates s{l, r, e.w0, e.dw0_n, e.dw0_t};
  const FluxAssembly fa = assemble_flux(s, g, 1e-4, 1e-4);
  const TimeIntegratedFlux f = time_integrated_flux(fa, 1e-3);
  const auto o = oracle::interface_flux(l, r, dw0, g.gamma, g.xi_dof(), 1e-4, 1e-4, 1e-3);
  CHECK(worst_rel({f.f[0], f.f[1], f.f[3], 1.0}, {o.flux[0], o.flux[1], o.flux[3], 1.0}) <= 1e-8);
  CHECK(std::abs(f.f[2]) < 1e-16);
  CHECK(worst_rel({f.w[0], f.w[1], f.w[3], 1.0}, {o.state[0], o.state[1], o.state[3], 1.0}) <= 1e-8);
}

TEST_CASE("random interfaces against the quadrature oracle")
{
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> d(-1.0, 1.0), pos(0.5, 2.0);
  const GasModel g = gas2d();
  GasModel gv = g;
  gv.mu = 2e-3;
  double worst = 0.0;
  for (int t = 0; t < 12; ++t) {
    const SideState l =
        side(prim(pos(rng), d(rng), d(rng), pos(rng)), {d(rng), d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng), d(rng)});
    const SideState r =
        side(prim(pos(rng), d(rng), d(rng), pos(rng)), {d(rng), d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng), d(rng)});
    const Vec4 dw0 = {d(rng), d(rng), d(rng), d(rng)};
    const double dt = 0.02 * pos(rng);
    const GasModel& gm = t % 3 == 2 ? gv : g;
    CollisionModel model = CollisionModel::from_gas(gm);
    model.split_tau = t % 3 != 1;
    const FluxAssembly fa = assemble_flux(l, r, dw0, gm, model, dt);
    for (double delta : {0.5 * dt, dt}) {
      const TimeIntegratedFlux f = time_integrated_flux(fa, delta);
      const auto o = oracle::interface_flux(l, r, dw0, gm.gamma, gm.xi_dof(), fa.tau, fa.tau_ce, delta);
      worst = std::max({worst, worst_rel(f.f, o.flux), worst_rel(f.w, o.state)});
      const Vec4 pc = prandtl_correction(f, fa, 0.73).f;
      const auto& F = o.flux;
      const auto& W = o.state;
      const double U = o.w0.u, V = o.w0.v;
      const double q = (F[3] - U * W[3]) - (U * (F[1] - U * W[1]) + V * (F[2] - U * W[2])) +
                       0.5 * (U * U + V * V) * (F[0] - U * W[0]);
      CHECK(pc[3] == Approx(F[3] + (1.0 / 0.73 - 1.0) * q).epsilon(1e-8));
      for (int k = 0; k < 3; ++k) CHECK(pc[k] == f.f[k]);
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("Prandtl correction")
{
  const GasModel g = gas2d();
  CollisionModel m;
  const FluxAssembly fa =
      assemble_flux(side(prim(1.0, 0.1, 0.3, 1.0), {0.0, 0.0, 0.5, 0.0}), side(prim(1.0, 0.1, 0.3, 1.0), {0.0, 0.0, 0.5, 0.0}),
                    {0.0, 0.0, 0.5, 0.0}, g, m, 0.01);
  const TimeIntegratedFlux f = time_integrated_flux(fa, 0.01);
  const TimeIntegratedFlux same = prandtl_correction(f, fa, 1.0);
  for (int k = 0; k < 4; ++k) CHECK(same.f[k] == f.f[k]);
  const TimeIntegratedFlux c = prandtl_correction(f, fa, 0.5);
  for (int k = 0; k < 3; ++k) CHECK(c.f[k] == f.f[k]);

  const FluxAssembly lean = assemble_flux(side(prim(1.0, 0.0, 0.0, 1.0)), side(prim(1.0, 0.0, 0.0, 1.0)), Vec4{}, g, m,
                                          0.01, false);
  REQUIRE_THROWS_AS(prandtl_correction(time_integrated_flux(lean, 0.01), lean, 0.7), ConfigError);
}

TEST_CASE("non-physical merged state is reported")
{
  const GasModel g = gas2d();
  Primitive bad = prim(1.0, 0.0, 0.0, 1.0);
  bad.lambda = -0.5;
  REQUIRE_THROWS_AS(merge_equilibrium(side(bad), side(prim(1.0, 0.0, 0.0, 1.0)), Vec4{}, g), SingularMomentSystem);
}
