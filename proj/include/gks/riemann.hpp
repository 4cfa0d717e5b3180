#pragma once

#include "gks/gas.hpp"

namespace gks {

struct StarState
{
  double p = 0.0;
  double u = 0.0;
  double rho_left = 0.0;
  double rho_right = 0.0;
  int iterations = 0;
};

/// Star region of the 1D Euler Riemann problem (Newton iteration on the
/// pressure function, relative tolerance tol). Uses u of each state as the
/// normal velocity. Throws VacuumFormation.
StarState riemann_star(const Primitive& left, const Primitive& right, double gamma, double tol = 1e-12);

/// Self-similar solution at xi = x/t; the tangential velocity is carried
/// across the contact.
Primitive exact_riemann(const Primitive& left, const Primitive& right, double xi, double gamma, double tol = 1e-12);

} // namespace gks
