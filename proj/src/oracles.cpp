#include "gks/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gks/errors.hpp"

namespace gks {

double error_norm(const Field& numerical, const Field& reference, Norm norm, int component, NormScale scale)
{
  const StructuredGrid& g = numerical.grid();
  double acc = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    double row = 0.0;
    for (int i = 0; i < g.nx; ++i) {
      const double e = std::abs(numerical(i, j)[component] - reference(i, j)[component]);
      if (norm == Norm::L1) row += e;
      else if (norm == Norm::L2) row += e * e;
      else row = std::max(row, e);
    }
    if (norm == Norm::Linf) acc = std::max(acc, row);
    else acc += row;
  }
  if (norm == Norm::Linf) return acc;
  const double w = scale == NormScale::integrated ? g.cell_volume() : 1.0 / static_cast<double>(g.cells());
  return norm == Norm::L1 ? acc * w : std::sqrt(acc * w);
}

double error_norm(const Field& numerical, const PointState& reference, double t, const GasModel& gas, Norm norm,
                  int component, NormScale scale)
{
  return error_norm(numerical, cell_averages(reference, t, numerical.grid(), gas), norm, component, scale);
}

std::vector<double> convergence_order(const std::vector<double>& errors)
{
  for (double e : errors)
    if (!(e > 0.0)) throw DegenerateError("convergence order needs nonzero errors");
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) out.push_back(std::log2(errors[k] / errors[k + 1]));
  return out;
}

namespace {

struct Y3
{
  double f, fp, fpp;
};

Y3 rhs(const Y3& y) { return {y.fp, y.fpp, -y.f * y.fpp}; }

Y3 axpy(const Y3& y, double h, const Y3& k) { return {y.f + h * k.f, y.fp + h * k.fp, y.fpp + h * k.fpp}; }

Y3 rk4(const Y3& y, double h)
{
  const Y3 k1 = rhs(y);
  const Y3 k2 = rhs(axpy(y, 0.5 * h, k1));
  const Y3 k3 = rhs(axpy(y, 0.5 * h, k2));
  const Y3 k4 = rhs(axpy(y, h, k3));
  return {y.f + h / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f),
          y.fp + h / 6.0 * (k1.fp + 2.0 * k2.fp + 2.0 * k3.fp + k4.fp),
          y.fpp + h / 6.0 * (k1.fpp + 2.0 * k2.fpp + 2.0 * k3.fpp + k4.fpp)};
}

constexpr double shoot_eta = 12.0;
constexpr int shoot_steps = 12000;

double shoot(double s)
{
  Y3 y{0.0, 0.0, s};
  const double h = shoot_eta / shoot_steps;
  for (int n = 0; n < shoot_steps; ++n) y = rk4(y, h);
  return y.fp - 1.0;
}

} // namespace

double blasius_wall_shear()
{
  static const double value = [] {
    double lo = 0.1, hi = 1.0;
    for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (shoot(mid) > 0.0) hi = mid;
      else lo = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return value;
}

std::vector<BlasiusRow> blasius_profile(double eta_max, int samples)
{
  if (samples < 2) samples = 2;
  const double s = blasius_wall_shear();
  const int sub = 20;
  const double h = eta_max / (samples - 1);
  std::vector<BlasiusRow> out;
  out.reserve(samples);
  Y3 y{0.0, 0.0, s};
  for (int n = 0; n < samples; ++n) {
    out.push_back({n * h, y.f, y.fp, y.fpp});
    for (int k = 0; k < sub; ++k) y = rk4(y, h / sub);
  }
  return out;
}

double blasius_velocity(double y, double x, double u_inf, double nu)
{
  if (x <= 0.0) return 1.0;
  const double eta = y * std::sqrt(u_inf / (2.0 * nu * x));
  if (eta >= shoot_eta) return 1.0;
  Y3 s{0.0, 0.0, blasius_wall_shear()};
  const int steps = std::max(1, static_cast<int>(std::ceil(eta / 1e-3)));
  const double h = eta / steps;
  for (int n = 0; n < steps; ++n) s = rk4(s, h);
  return s.fp;
}

double vortex_height(const Field& field, double x_lo, double x_hi)
{
  const StructuredGrid& g = field.grid();
  double best = 0.0;
  double height = -1.0;
  std::vector<double> psi(static_cast<std::size_t>(g.ny) + 1);
  for (int i = 0; i < g.nx; ++i) {
    const double x = g.xc(i);
    if (x < x_lo || x > x_hi) continue;
    // psi at cell tops; psi(y0) = 0 at the wall.
    psi[0] = 0.0;
    for (int j = 0; j < g.ny; ++j) {
      const Vec4& w = field(i, j);
      psi[j + 1] = psi[j] + w[1] / w[0] * g.dy;
    }
    // Near-wall extremum followed by a return of psi through zero: a closed
    // recirculation attached to the wall.
    int jc = -1;
    double ext = 0.0;
    for (int j = 1; j <= g.ny; ++j) {
      if (jc >= 0 && psi[j] * ext <= 0.0) break;
      if (std::abs(psi[j]) > std::abs(ext)) {
        ext = psi[j];
        jc = j;
      }
    }
    if (jc < 0 || ext == 0.0) continue;
    int jz = -1;
    for (int j = jc + 1; j <= g.ny; ++j) {
      if (psi[j] * ext <= 0.0) {
        jz = j;
        break;
      }
    }
    if (jz < 0 || std::abs(ext) <= best) continue;
    best = std::abs(ext);
    const double a = psi[jz - 1], b = psi[jz];
    const double frac = a == b ? 0.0 : a / (a - b);
    height = (jz - 1 + frac) * g.dy;
  }
  if (height < 0.0) throw NoVortexFound("no wall-attached recirculation found");
  return height;
}

std::vector<std::pair<double, double>> read_reference_table(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw IoError("cannot open reference table '" + path + "'");
  std::vector<std::pair<double, double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double a, b;
    if (!(ss >> a)) continue;
    if (!(ss >> b)) throw IoError(path + ":" + std::to_string(lineno) + ": expected two columns");
    rows.emplace_back(a, b);
  }
  return rows;
}

double sample_velocity(const Field& field, const GasModel& gas, int component, double x, double y)
{
  const StructuredGrid& g = field.grid();
  auto vel = [&](int i, int j) {
    i = std::clamp(i, 0, g.nx - 1);
    j = std::clamp(j, 0, g.ny - 1);
    const Primitive p = primitive_from_conserved(field(i, j), gas);
    return component == 1 ? p.u : p.v;
  };
  const double fx = (x - g.x0) / g.dx - 0.5;
  const double fy = g.two_d() ? (y - g.y0) / g.dy - 0.5 : 0.0;
  const int i = static_cast<int>(std::floor(fx));
  const int j = static_cast<int>(std::floor(fy));
  const double tx = fx - i, ty = fy - j;
  if (!g.two_d()) return (1.0 - tx) * vel(i, 0) + tx * vel(i + 1, 0);
  return (1.0 - tx) * (1.0 - ty) * vel(i, j) + tx * (1.0 - ty) * vel(i + 1, j) + (1.0 - tx) * ty * vel(i, j + 1) +
         tx * ty * vel(i + 1, j + 1);
}

} // namespace gks
