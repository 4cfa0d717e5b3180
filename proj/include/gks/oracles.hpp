#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gks/cases.hpp"
#include "gks/grid.hpp"

namespace gks {

enum class Norm { L1, L2, Linf };

/// Norm of the difference of one conserved component over interior cells
/// (component 0 is density). Linf ignores the scale.
double error_norm(const Field& numerical, const Field& reference, Norm norm, int component = 0,
                  NormScale scale = NormScale::volume_averaged);

/// Same against the cell averages of a point reference at time t.
double error_norm(const Field& numerical, const PointState& reference, double t, const GasModel& gas, Norm norm,
                  int component = 0, NormScale scale = NormScale::volume_averaged);

/// log2(e[k] / e[k+1]) for successive 2x refinements. Throws DegenerateError
/// if any error is zero.
std::vector<double> convergence_order(const std::vector<double>& errors);

struct BlasiusRow
{
  double eta, f, fp, fpp;
};

/// Solution of f''' + f f'' = 0, f(0) = f'(0) = 0, f'(inf) = 1, sampled at
/// equal steps on [0, eta_max]. The similarity variable is
/// eta = y sqrt(U / (2 nu x)).
std::vector<BlasiusRow> blasius_profile(double eta_max = 10.0, int samples = 1001);

/// Converged wall value f''(0).
double blasius_wall_shear();

/// U / U_inf from the Blasius solution at height y and distance x from the
/// leading edge.
double blasius_velocity(double y, double x, double u_inf, double nu);

/// Height of the primary recirculation above the lower wall, from the
/// streamfunction psi(x, y) = int_0^y u dy' over x in [x_lo, x_hi].
/// Throws NoVortexFound.
double vortex_height(const Field& field, double x_lo = 0.4, double x_hi = 1.0);

/// Two-column whitespace-delimited table; '#' starts a comment. Throws IoError.
std::vector<std::pair<double, double>> read_reference_table(const std::string& path);

/// Bilinear sample of a primitive velocity component (1 = u, 2 = v) at (x, y).
double sample_velocity(const Field& field, const GasModel& gas, int component, double x, double y);

} // namespace gks
