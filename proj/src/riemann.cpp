#include "gks/riemann.hpp"

#include <algorithm>
#include <cmath>

#include "gks/errors.hpp"

namespace gks {

namespace {

struct Side
{
  double rho, u, p, c, A, B;
};

Side side(const Primitive& s, double g)
{
  return {s.rho, s.u, s.p, std::sqrt(g * s.p / s.rho), 2.0 / ((g + 1.0) * s.rho), (g - 1.0) / (g + 1.0) * s.p};
}

// Pressure function of one side and its derivative.
void pressure_function(double p, const Side& k, double g, double& f, double& df)
{
  if (p > k.p) {
    const double q = std::sqrt(k.A / (p + k.B));
    f = (p - k.p) * q;
    df = q * (1.0 - 0.5 * (p - k.p) / (k.B + p));
  } else {
    const double r = p / k.p;
    f = 2.0 * k.c / (g - 1.0) * (std::pow(r, (g - 1.0) / (2.0 * g)) - 1.0);
    df = 1.0 / (k.rho * k.c) * std::pow(r, -(g + 1.0) / (2.0 * g));
  }
}

double star_density(double p, const Side& k, double g)
{
  const double r = p / k.p;
  if (p > k.p) {
    const double gm = (g - 1.0) / (g + 1.0);
    return k.rho * (r + gm) / (gm * r + 1.0);
  }
  return k.rho * std::pow(r, 1.0 / g);
}

} // namespace

StarState riemann_star(const Primitive& left, const Primitive& right, double g, double tol)
{
  const Side l = side(left, g), r = side(right, g);
  const double du = r.u - l.u;
  if (2.0 * (l.c + r.c) / (g - 1.0) <= du) throw VacuumFormation("Riemann data generate vacuum");

  // Two-rarefaction guess, safe and close for most data.
  const double z = (g - 1.0) / (2.0 * g);
  double p = std::pow((l.c + r.c - 0.5 * (g - 1.0) * du) / (l.c / std::pow(l.p, z) + r.c / std::pow(r.p, z)), 1.0 / z);
  p = std::max(p, 1e-14 * std::min(l.p, r.p));

  StarState s;
  for (int it = 1; it <= 200; ++it) {
    double fl, dfl, fr, dfr;
    pressure_function(p, l, g, fl, dfl);
    pressure_function(p, r, g, fr, dfr);
    double pn = p - (fl + fr + du) / (dfl + dfr);
    if (pn <= 0.0) pn = 0.5 * p;
    const double change = 2.0 * std::abs(pn - p) / (pn + p);
    p = pn;
    s.iterations = it;
    if (change < tol) break;
  }
  double fl, dfl, fr, dfr;
  pressure_function(p, l, g, fl, dfl);
  pressure_function(p, r, g, fr, dfr);
  s.p = p;
  s.u = 0.5 * (l.u + r.u) + 0.5 * (fr - fl);
  s.rho_left = star_density(p, l, g);
  s.rho_right = star_density(p, r, g);
  return s;
}

Primitive exact_riemann(const Primitive& left, const Primitive& right, double xi, double g, double tol)
{
  const StarState s = riemann_star(left, right, g, tol);
  const Side l = side(left, g), r = side(right, g);
  const double gm = (g - 1.0) / (g + 1.0);
  if (xi <= s.u) {
    const double v = left.v;
    if (s.p > l.p) {
      const double sl = l.u - l.c * std::sqrt((g + 1.0) / (2.0 * g) * s.p / l.p + (g - 1.0) / (2.0 * g));
      if (xi <= sl) return left;
      return Primitive::from_rho_u_v_p(s.rho_left, s.u, v, s.p);
    }
    const double c_star = l.c * std::pow(s.p / l.p, (g - 1.0) / (2.0 * g));
    if (xi <= l.u - l.c) return left;
    if (xi >= s.u - c_star) return Primitive::from_rho_u_v_p(s.rho_left, s.u, v, s.p);
    const double k = 2.0 / (g + 1.0) + gm / l.c * (l.u - xi);
    const double rho = l.rho * std::pow(k, 2.0 / (g - 1.0));
    const double u = 2.0 / (g + 1.0) * (l.c + 0.5 * (g - 1.0) * l.u + xi);
    const double p = l.p * std::pow(k, 2.0 * g / (g - 1.0));
    return Primitive::from_rho_u_v_p(rho, u, v, p);
  }
  const double v = right.v;
  if (s.p > r.p) {
    const double sr = r.u + r.c * std::sqrt((g + 1.0) / (2.0 * g) * s.p / r.p + (g - 1.0) / (2.0 * g));
    if (xi >= sr) return right;
    return Primitive::from_rho_u_v_p(s.rho_right, s.u, v, s.p);
  }
  const double c_star = r.c * std::pow(s.p / r.p, (g - 1.0) / (2.0 * g));
  if (xi >= r.u + r.c) return right;
  if (xi <= s.u + c_star) return Primitive::from_rho_u_v_p(s.rho_right, s.u, v, s.p);
  const double k = 2.0 / (g + 1.0) - gm / r.c * (r.u - xi);
  const double rho = r.rho * std::pow(k, 2.0 / (g - 1.0));
  const double u = 2.0 / (g + 1.0) * (-r.c + 0.5 * (g - 1.0) * r.u + xi);
  const double p = r.p * std::pow(k, 2.0 * g / (g - 1.0));
  return Primitive::from_rho_u_v_p(rho, u, v, p);
}

} // namespace gks
