#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "gks/characteristic.hpp"
#include "gks/errors.hpp"
#include "gks/reconstruction.hpp"
#include "gks/weno.hpp"

using namespace gks;
using Catch::Approx;

namespace {

const double pi = std::numbers::pi;

GasModel gas2d() { return GasModel::ideal(1.4, Dimension::two); }

// Exact average of x^n over [a, b].
double avg_pow(int n, double a, double b) { return (std::pow(b, n + 1) - std::pow(a, n + 1)) / ((n + 1) * (b - a)); }

std::array<double, 5> averages(const std::function<double(double, double)>& avg, double x0, double h)
{
  std::array<double, 5> w{};
  for (int k = 0; k < 5; ++k) w[k] = avg(x0 + (k - 2.5) * h, x0 + (k - 1.5) * h);
  return w;
}

Vec4 cons(double rho, double u, double v, double p)
{
  return conserved_from_primitive(Primitive::from_rho_u_v_p(rho, u, v, p), gas2d()).vec();
}

} // namespace

TEST_CASE("WENO5 on constant and linear data")
{
  const std::array<double, 5> c{2.5, 2.5, 2.5, 2.5, 2.5};
  for (FaceSide s : {FaceSide::left, FaceSide::right}) {
    const ScalarFace f = weno5_face_scalar(c, 0.1, s);
    CHECK(f.value == Approx(2.5).epsilon(1e-14));
    CHECK(std::abs(f.slope) < 1e-12);
  }
  const double h = 0.05;
  const auto lin = averages([](double a, double b) { return 1.0 + 3.0 * 0.5 * (a + b); }, 0.3, h);
  const ScalarFace r = weno5_face_scalar(lin, h, FaceSide::right);
  const ScalarFace l = weno5_face_scalar(lin, h, FaceSide::left);
  CHECK(r.value == Approx(1.0 + 3.0 * (0.3 + 0.5 * h)).epsilon(1e-13));
  CHECK(l.value == Approx(1.0 + 3.0 * (0.3 - 0.5 * h)).epsilon(1e-13));
  CHECK(r.slope == Approx(3.0).epsilon(1e-11));
  CHECK(l.slope == Approx(3.0).epsilon(1e-11));
  const auto w = weno5_weights(lin);
  CHECK(w[0] == Approx(0.1).epsilon(1e-12));
  CHECK(w[1] == Approx(0.6).epsilon(1e-12));
  CHECK(w[2] == Approx(0.3).epsilon(1e-12));
}

TEST_CASE("WENO5 on quartic averages approaches the exact face value as the data flattens")
{
  // Smoothness indicators of x^4 differ between substencils, so the
  // nonlinear weights only tend to the linear ones as h/x -> 0.
  double prev = 1.0;
  for (double x0 : {10.0, 100.0, 1000.0}) {
    const auto w = averages([](double a, double b) { return avg_pow(4, a, b); }, x0, 1.0);
    const double exact = std::pow(x0 + 0.5, 4);
    const double rel = std::abs(weno5_face_scalar(w, 1.0, FaceSide::right).value - exact) / exact;
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK(prev < 1e-12);
}

TEST_CASE("WENO5 weight of a discontinuous substencil")
{
  const std::array<double, 5> jump{1.0, 1.0, 1.0, 1.0, 0.125};
  const auto w = weno5_weights(jump);
  CHECK(w[2] < 1e-4);
  CHECK(weno5_face_scalar(jump, 1.0, FaceSide::right).value == Approx(1.0).epsilon(1e-6));
  const std::array<double, 5> far{1.0, 0.125, 0.125, 0.125, 0.125};
  CHECK(weno5_weights(far)[0] < 1e-4);
}

TEST_CASE("WENO5 face values converge at fifth order")
{
  auto run = [](int n) {
    const double h = 2.0 / n;
    auto avg = [&](double a, double b) { return 1.0 + 0.2 * (std::cos(pi * a) - std::cos(pi * b)) / (pi * (b - a)); };
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = -1.0 + (i + 0.5) * h;
      const auto w = averages(avg, x, h);
      e += h * std::abs(weno5_face_scalar(w, h, FaceSide::right).value - (1.0 + 0.2 * std::sin(pi * (x + 0.5 * h))));
      e += h * std::abs(weno5_face_scalar(w, h, FaceSide::left).value - (1.0 + 0.2 * std::sin(pi * (x - 0.5 * h))));
    }
    return e;
  };
  std::vector<double> e;
  for (int n : {20, 40, 80, 160}) e.push_back(run(n));
  for (std::size_t k = 1; k < e.size(); ++k) {
    INFO("N = " << (20 << k) << " order " << std::log2(e[k - 1] / e[k]));
    CHECK(std::log2(e[k - 1] / e[k]) >= 4.7);
  }
}

TEST_CASE("WENO5 face slope converges at second order")
{
  auto err = [](int n) {
    const double h = 2.0 / n;
    auto avg = [&](double a, double b) { return 1.0 + 0.2 * (std::cos(pi * a) - std::cos(pi * b)) / (pi * (b - a)); };
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = -1.0 + (i + 0.5) * h;
      const auto w = averages(avg, x, h);
      e += h * std::abs(weno5_face_scalar(w, h, FaceSide::right).slope - 0.2 * pi * std::cos(pi * (x + 0.5 * h)));
    }
    return e;
  };
  const double e1 = err(80), e2 = err(160), e3 = err(320);
  CHECK(std::log2(e1 / e2) >= 1.8);
  CHECK(std::log2(e2 / e3) >= 1.8);
}

TEST_CASE("WENO5 stays within the data range at a jump")
{
  std::vector<double> cells(20);
  for (int i = 0; i < 20; ++i) cells[i] = i < 10 ? 1.0 : 0.125;
  for (int i = 2; i < 18; ++i) {
    const std::array<double, 5> w{cells[i - 2], cells[i - 1], cells[i], cells[i + 1], cells[i + 2]};
    for (FaceSide s : {FaceSide::left, FaceSide::right}) {
      const double v = weno5_face_scalar(w, 1.0, s).value;
      CHECK(v <= 1.0 + 0.1 * 0.875);
      CHECK(v >= 0.125 - 0.1 * 0.875);
    }
  }
}

TEST_CASE("vector face reconstruction matches the scalar one")
{
  StencilWindow s;
  s.h = 0.1;
  for (int k = 0; k < 5; ++k) s.w[k] = {1.0 + 0.1 * k, std::sin(k), 0.3 * k * k, 2.0 - 0.2 * k};
  const FaceReconstruction f = weno5_face_value(s, FaceSide::left);
  for (int c = 0; c < 4; ++c) {
    std::array<double, 5> w{};
    for (int k = 0; k < 5; ++k) w[k] = s.w[k][c];
    const ScalarFace sc = weno5_face_scalar(w, 0.1, FaceSide::left);
    CHECK(f.value[c] == sc.value);
    CHECK(f.slope[c] == sc.slope);
  }
}

TEST_CASE("equilibrium face derivative")
{
  const Vec4 c{1.0, 2.0, 3.0, 4.0};
  const Vec4 z = equilibrium_face_derivative({c, c, c, c}, 0.1);
  for (double d : z) CHECK(d == 0.0);

  const double h = 0.2, s = -1.7;
  std::array<Vec4, 4> lin{};
  for (int k = 0; k < 4; ++k) {
    const double x = (k - 1) * h;
    lin[k] = {0.5 + s * x, s * x, 0.0, 1.0};
  }
  const Vec4 d = equilibrium_face_derivative(lin, h);
  CHECK(d[0] == Approx(s).epsilon(1e-13));
  CHECK(d[1] == Approx(s).epsilon(1e-13));
  CHECK(std::abs(d[3]) < 1e-13);

  // The stencil is exact through quartics; quintic averages show the h^4 error.
  auto err = [](int n, double h) {
    const double x0 = 0.7;
    std::array<Vec4, 4> q{};
    for (int k = 0; k < 4; ++k) {
      const double a = x0 + (k - 2) * h;
      q[k] = {avg_pow(n, a, a + h), 0.0, 0.0, 0.0};
    }
    return std::abs(equilibrium_face_derivative(q, h)[0] - n * std::pow(x0, n - 1));
  };
  CHECK(err(4, 0.05) < 1e-11);
  const double o1 = std::log2(err(5, 0.04) / err(5, 0.02));
  const double o2 = std::log2(err(5, 0.02) / err(5, 0.01));
  CHECK(o1 == Approx(4.0).margin(0.1));
  CHECK(o2 == Approx(4.0).margin(0.1));
}

TEST_CASE("Gauss line")
{
  const GaussLine g = GaussLine::standard();
  CHECK(g.weights[0] == Approx(5.0 / 18.0).epsilon(1e-15));
  CHECK(g.weights[1] == Approx(8.0 / 18.0).epsilon(1e-15));
  CHECK(g.weights[0] + g.weights[1] + g.weights[2] == Approx(1.0).epsilon(1e-15));
  CHECK(g.points[2] == Approx(0.5 * std::sqrt(0.6)).epsilon(1e-15));
  CHECK(g.points[0] == -g.points[2]);
}

TEST_CASE("characteristic projection")
{
  const GasModel g = gas2d();
  SECTION("round trip for random physical reference states")
  {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(-2.0, 2.0), pos(0.1, 5.0);
    for (int t = 0; t < 50; ++t) {
      const Vec4 ref = cons(pos(rng), d(rng), d(rng), pos(rng));
      std::vector<Vec4> set;
      for (int k = 0; k < 4; ++k) set.push_back({d(rng), d(rng), d(rng), d(rng)});
      const CharacteristicRoundtrip r = characteristic_roundtrip(set, ref, g);
      for (std::size_t k = 0; k < set.size(); ++k)
        for (int c = 0; c < 4; ++c) CHECK(r.restored[k][c] == Approx(set[k][c]).margin(1e-12 * (1.0 + max_abs(set[k]))));
    }
  }
  SECTION("Sod stencil at the diaphragm")
  {
    const Vec4 l = cons(1.0, 0.0, 0.0, 1.0), r = cons(0.125, 0.0, 0.0, 0.1);
    const std::vector<Vec4> set{l, l, l, r, r, r};
    const CharacteristicRoundtrip rt = characteristic_roundtrip(set, 0.5 * (l + r), g);
    for (std::size_t k = 0; k < set.size(); ++k)
      for (int c = 0; c < 4; ++c) {
        CHECK(std::isfinite(rt.projected[k][c]));
        CHECK(rt.restored[k][c] == Approx(set[k][c]).margin(1e-12));
      }
  }
  SECTION("non-physical reference")
  {
    REQUIRE_THROWS_AS(CharacteristicBasis({1.0, 0.0, 0.0, -1.0}, g), NonPhysicalState);
  }
}

TEST_CASE("normal reconstruction")
{
  const GasModel g = gas2d();
  SECTION("constant field in characteristic variables")
  {
    const Vec4 c = cons(1.3, 0.4, -0.2, 0.9);
    FaceStencil s;
    s.fill(c);
    for (ReconVariables v : {ReconVariables::conservative, ReconVariables::characteristic}) {
      const FaceTrace t = reconstruct_normal(s, 0.1, g, v);
      for (int k = 0; k < 4; ++k) {
        CHECK(t.wl[k] == Approx(c[k]).epsilon(1e-13));
        CHECK(t.wr[k] == Approx(c[k]).epsilon(1e-13));
        CHECK(std::abs(t.dwl[k]) < 1e-11);
        CHECK(std::abs(t.dwr[k]) < 1e-11);
        CHECK(std::abs(t.s1[k]) < 1e-11);
      }
      CHECK_FALSE(t.fallback);
    }
  }
  SECTION("Sod diaphragm stays physical")
  {
    FaceStencil s;
    for (int k = 0; k < 6; ++k) s[k] = k < 3 ? cons(1.0, 0.0, 0.0, 1.0) : cons(0.125, 0.0, 0.0, 0.1);
    const FaceTrace t = reconstruct_normal(s, 0.01, g, ReconVariables::characteristic);
    CHECK(t.wl[0] == Approx(1.0).epsilon(1e-4));
    CHECK(t.wr[0] == Approx(0.125).epsilon(1e-3));
    CHECK(is_physical(t.wl));
    CHECK(is_physical(t.wr));
  }
  SECTION("non-physical side value falls back")
  {
    FaceStencil s;
    const double rho[6] = {1e-3, 1e-3, 1e-3, 10.0, 10.0, 10.0};
    for (int k = 0; k < 6; ++k) s[k] = cons(rho[k], k < 3 ? -3.0 : 3.0, 0.0, k < 3 ? 1e-4 : 50.0);
    const FaceTrace t = reconstruct_normal(s, 0.01, g, ReconVariables::conservative);
    CHECK(is_physical(t.wl));
    CHECK(is_physical(t.wr));
  }
}

namespace {

// Cell averages of f(x, y) on a 6 x 5 block around the face x = 0, y in
// [-h/2, h/2], by a tensor Gauss rule.
FaceNeighborhood block(const std::function<Vec4(double, double)>& f, double hn, double ht)
{
  const double gx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
  const double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};
  FaceNeighborhood n{};
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 6; ++i) {
      const double xc = (i - 2.5) * hn, yc = (j - 2) * ht;
      Vec4 acc{};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) acc += (0.25 * gw[a] * gw[b]) * f(xc + 0.5 * hn * gx[a], yc + 0.5 * ht * gx[b]);
      n[j][i] = acc;
    }
  return n;
}

} // namespace

TEST_CASE("2D face reconstruction")
{
  const GasModel g = gas2d();
  const GaussLine gl = GaussLine::standard();
  const double hn = 0.1, ht = 0.08;
  SECTION("uniform field")
  {
    const Vec4 c = cons(1.1, 0.3, 0.2, 0.8);
    const auto s = reconstruct_face_2d(block([&](double, double) { return c; }, hn, ht), hn, ht, gl, g,
                                       ReconVariables::characteristic);
    for (const InterfaceStates& p : s) {
      for (const Primitive& q : {p.left.prim, p.right.prim, p.w0}) {
        CHECK(q.rho == Approx(1.1).epsilon(1e-12));
        CHECK(q.u == Approx(0.3).epsilon(1e-12));
        CHECK(q.v == Approx(0.2).epsilon(1e-12));
        CHECK(q.p == Approx(0.8).epsilon(1e-12));
      }
      for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(p.left.dn[k]) < 1e-10);
        CHECK(std::abs(p.left.dt[k]) < 1e-10);
        CHECK(std::abs(p.right.dt[k]) < 1e-10);
        CHECK(std::abs(p.dw0_n[k]) < 1e-10);
        CHECK(std::abs(p.dw0_t[k]) < 1e-10);
      }
    }
  }
  SECTION("linear in the tangential coordinate")
  {
    auto f = [](double, double y) { return Vec4{1.0 + 0.5 * y, 0.2 + y, -0.1, 2.5 + 0.3 * y}; };
    const auto s = reconstruct_face_2d(block(f, hn, ht), hn, ht, gl, g, ReconVariables::conservative);
    for (int q = 0; q < 3; ++q) {
      const double y = gl.points[q] * ht;
      const Vec4 exact = f(0.0, y);
      const Vec4 wl = conserved_from_primitive(s[q].left.prim, g).vec();
      const Vec4 wr = conserved_from_primitive(s[q].right.prim, g).vec();
      for (int k = 0; k < 4; ++k) {
        CHECK(wl[k] == Approx(exact[k]).epsilon(1e-12));
        CHECK(wr[k] == Approx(exact[k]).epsilon(1e-12));
      }
      CHECK(s[q].left.dt[0] == Approx(0.5).epsilon(1e-10));
      CHECK(s[q].right.dt[1] == Approx(1.0).epsilon(1e-10));
      CHECK(s[q].dw0_t[3] == Approx(0.3).epsilon(1e-10));
    }
  }
  SECTION("Gauss average of the tangential values equals the line average")
  {
    auto f = [](double x, double y) {
      return Vec4{1.0 + 0.2 * std::sin(3 * x + 2 * y), 0.3 * std::cos(x - y), 0.1 + 0.2 * y * y,
                  2.5 + 0.1 * std::exp(x + y)};
    };
    const FaceNeighborhood n = block(f, hn, ht);
    std::array<FaceTrace, 5> rows{};
    for (int j = 0; j < 5; ++j) rows[j] = reconstruct_normal(n[j], hn, g, ReconVariables::characteristic);
    const auto pts = reconstruct_tangential(rows, ht, gl, g);
    Vec4 al{}, ar{};
    for (int q = 0; q < 3; ++q) {
      al += gl.weights[q] * conserved_from_primitive(pts[q].left.prim, g).vec();
      ar += gl.weights[q] * conserved_from_primitive(pts[q].right.prim, g).vec();
    }
    for (int k = 0; k < 4; ++k) {
      CHECK(al[k] == Approx(rows[2].wl[k]).margin(1e-12));
      CHECK(ar[k] == Approx(rows[2].wr[k]).margin(1e-12));
    }
  }
  SECTION("smooth field converges at the Gauss points")
  {
    auto f = [](double x, double y) {
      return Vec4{1.0 + 0.2 * std::sin(x + 2 * y), 0.4 + 0.1 * std::cos(x - y), 0.1 * x * y, 2.6 + 0.2 * std::sin(y)};
    };
    auto err = [&](double h) {
      const auto s = reconstruct_face_2d(block(f, h, h), h, h, gl, g, ReconVariables::conservative);
      double e = 0.0;
      for (int q = 0; q < 3; ++q) {
        const Vec4 w = conserved_from_primitive(s[q].left.prim, g).vec();
        e = std::max(e, max_abs(w - f(0.0, gl.points[q] * h)));
      }
      return e;
    };
    const double e1 = err(0.2), e2 = err(0.1), e3 = err(0.05);
    INFO("errors " << e1 << " " << e2 << " " << e3);
    CHECK(std::log2(e1 / e2) >= 4.0);
    CHECK(std::log2(e2 / e3) >= 4.0);
  }
}

TEST_CASE("WENO-AO polynomial")
{
  SECTION("reproduces the center average")
  {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
      const std::array<double, 5> w{d(rng), d(rng), d(rng), d(rng), d(rng)};
      const WenoAoPolynomial p(w);
      const auto& c = p.coefficients();
      CHECK(c[0] + c[2] / 12.0 + c[4] / 80.0 == Approx(w[2]).margin(1e-14));
    }
  }
  SECTION("linear data")
  {
    const std::array<double, 5> w{-2.0, -1.0, 0.0, 1.0, 2.0};
    const WenoAoPolynomial p(w);
    for (double xi : {-0.5, -0.2, 0.0, 0.3, 0.5}) {
      CHECK(p.value(xi) == Approx(xi).margin(1e-14));
      CHECK(p.slope(xi, 0.5) == Approx(2.0).epsilon(1e-13));
    }
  }
  SECTION("even data gives an even polynomial")
  {
    // Even quartic about the center: mirror-symmetric substencils.
    const std::array<double, 5> w{avg_pow(4, -2.5, -1.5) + 50.0, avg_pow(4, -1.5, -0.5) + 50.0, avg_pow(4, -0.5, 0.5) + 50.0,
                                  avg_pow(4, 0.5, 1.5) + 50.0, avg_pow(4, 1.5, 2.5) + 50.0};
    const WenoAoPolynomial p(w);
    CHECK(p.value(0.5) == Approx(p.value(-0.5)).epsilon(1e-14));
  }
}
