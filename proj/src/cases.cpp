#include "gks/cases.hpp"

#include <cmath>
#include <numbers>

#include "gks/errors.hpp"
#include "gks/riemann.hpp"

namespace gks {

namespace {

constexpr double pi = std::numbers::pi;

Primitive prim(double rho, double u, double v, double p) { return Primitive::from_rho_u_v_p(rho, u, v, p); }

BoundarySpec kind(BoundaryKind k)
{
  BoundarySpec b;
  b.kind = k;
  return b;
}

BoundarySpec fixed(const Primitive& s)
{
  BoundarySpec b = kind(BoundaryKind::dirichlet_fixed);
  b.state = s;
  return b;
}

BoundarySpec far_field(const Primitive& s)
{
  BoundarySpec b = kind(BoundaryKind::non_reflecting);
  b.state = s;
  return b;
}

BoundarySpec segment(BoundarySpec b, double from, double to)
{
  b.from = from;
  b.to = to;
  return b;
}

CaseSpec base(const std::string& name, const std::string& description, Dimension dim)
{
  CaseSpec c;
  c.name = name;
  c.description = description;
  c.dim = dim;
  c.initializer = name;
  c.gas = GasModel::ideal(1.4, dim);
  return c;
}

// Sod and the viscous shock tube share the left/right layout.
const Primitive sod_left = prim(1.0, 0.0, 0.0, 1.0);
const Primitive sod_right = prim(0.125, 0.0, 0.0, 0.1);

constexpr double shock_vortex_mach = 1.1;
constexpr double flat_plate_mach = 0.15;
constexpr double flat_plate_re = 1e5;
constexpr double cavity_mach = 0.15;
constexpr double cavity_re = 1000.0;

Primitive shock_vortex_upstream(double gamma)
{
  return prim(shock_vortex_mach * shock_vortex_mach, std::sqrt(gamma), 0.0, 1.0);
}

Primitive stationary_shock_downstream(const Primitive& up, double gamma)
{
  const double c = std::sqrt(gamma * up.p / up.rho);
  const double m2 = up.u * up.u / (c * c);
  const double ratio = (gamma + 1.0) * m2 / ((gamma - 1.0) * m2 + 2.0);
  const double p = up.p * (1.0 + 2.0 * gamma / (gamma + 1.0) * (m2 - 1.0));
  return prim(up.rho * ratio, up.u / ratio, 0.0, p);
}

Primitive double_mach_post() { return prim(8.0, 4.125 * std::sqrt(3.0), -4.125, 116.5); }
Primitive double_mach_pre() { return prim(1.4, 0.0, 0.0, 1.0); }

Primitive flat_plate_free_stream(double gamma) { return prim(1.0, flat_plate_mach, 0.0, 1.0 / gamma); }

Primitive isentropic_vortex(double x, double y, double gamma)
{
  constexpr double eps = 5.0;
  const double r2 = x * x + y * y;
  const double du = eps / (2.0 * pi) * std::exp(0.5 * (1.0 - r2));
  const double dT = -(gamma - 1.0) * eps * eps / (8.0 * gamma * pi * pi) * std::exp(1.0 - r2);
  const double T = 1.0 + dT;
  const double rho = std::pow(T, 1.0 / (gamma - 1.0));
  return prim(rho, 1.0 - du * y, 1.0 + du * x, rho * T);
}

double wrap(double x, double lo, double hi)
{
  const double L = hi - lo;
  double r = std::fmod(x - lo, L);
  if (r < 0.0) r += L;
  return lo + r;
}

} // namespace

void CaseSpec::validate() const
{
  if (!(t_final > 0.0) && !steady) throw ConfigError("case " + name + ": final time must be positive");
  if (meshes.empty()) throw ConfigError("case " + name + ": mesh list is empty");
  if (!(cfl > 0.0)) throw ConfigError("case " + name + ": cfl must be positive");
  gas.validate();
  for (const auto& m : meshes) grid(m).validate();
}

StructuredGrid CaseSpec::grid(const Mesh& mesh) const
{
  if (dim == Dimension::one) return StructuredGrid::line(mesh.nx, x0, x1);
  return StructuredGrid::plane(mesh.nx, mesh.ny, x0, x1, y0, y1);
}

std::vector<std::string> case_names()
{
  return {"advection",   "sod",          "blast",       "shu_osher",  "vortex", "riemann2d_1",
          "riemann2d_2", "shock_vortex", "double_mach", "flat_plate", "cavity", "viscous_shock_tube"};
}

CaseSpec make_case(const std::string& name)
{
  CaseSpec c;
  if (name == "advection") {
    c = base(name, "1D advection of a density sine wave", Dimension::one);
    c.x0 = 0.0;
    c.x1 = 2.0;
    c.meshes = {{20, 1}, {40, 1}, {80, 1}, {160, 1}};
    c.t_final = 2.0;
    c.bc = BoundarySet::all(kind(BoundaryKind::periodic));
    c.recon = ReconVariables::conservative;
    c.reference = ReferenceKind::advected_wave;
    c.norm_scale = NormScale::integrated;
  } else if (name == "sod") {
    c = base(name, "Sod shock tube", Dimension::one);
    c.meshes = {{100, 1}};
    c.t_final = 0.2;
    c.bc = BoundarySet::all(kind(BoundaryKind::non_reflecting));
    c.reference = ReferenceKind::exact_riemann;
  } else if (name == "blast") {
    c = base(name, "Woodward-Colella blast wave", Dimension::one);
    c.x0 = 0.0;
    c.x1 = 100.0;
    c.meshes = {{200, 1}, {400, 1}};
    c.t_final = 3.8;
    c.bc = BoundarySet::all(kind(BoundaryKind::reflective_slip));
  } else if (name == "shu_osher") {
    c = base(name, "Shu-Osher shock and entropy wave interaction", Dimension::one);
    c.x0 = -5.0;
    c.x1 = 5.0;
    c.meshes = {{400, 1}};
    c.t_final = 1.8;
    c.bc = BoundarySet::all(kind(BoundaryKind::non_reflecting));
    // No wave reaches either end before t = 1.8: hold the ghosts at the initial data.
    BoundarySpec ends = kind(BoundaryKind::dirichlet_fixed);
    ends.profile = [init = initial_state(c)](double x, double y) { return init(x, y, 0.0); };
    c.bc.xlo = c.bc.xhi = {ends};
  } else if (name == "vortex") {
    c = base(name, "isentropic vortex convected diagonally", Dimension::two);
    c.x0 = c.y0 = -5.0;
    c.x1 = c.y1 = 5.0;
    c.meshes = {{20, 20}, {40, 40}, {80, 80}};
    c.t_final = 10.0;
    c.bc = BoundarySet::all(kind(BoundaryKind::periodic));
    c.recon = ReconVariables::conservative;
    c.reference = ReferenceKind::isentropic_vortex;
  } else if (name == "riemann2d_1") {
    c = base(name, "2D Riemann problem with four shocks", Dimension::two);
    c.meshes = {{400, 400}};
    c.t_final = 0.3;
    c.bc = BoundarySet::all(kind(BoundaryKind::non_reflecting));
  } else if (name == "riemann2d_2") {
    c = base(name, "2D Riemann problem with rarefactions and vortex sheets", Dimension::two);
    c.meshes = {{600, 600}};
    c.t_final = 0.25;
    c.bc = BoundarySet::all(kind(BoundaryKind::non_reflecting));
  } else if (name == "shock_vortex") {
    c = base(name, "vortex passing a stationary Mach 1.1 shock", Dimension::two);
    c.x0 = 0.0;
    c.x1 = 2.0;
    c.meshes = {{400, 200}};
    c.t_final = 0.8;
    c.bc.xlo = {fixed(shock_vortex_upstream(c.gas.gamma))};
    c.bc.xhi = {kind(BoundaryKind::non_reflecting)};
    c.bc.ylo = {kind(BoundaryKind::reflective_slip)};
    c.bc.yhi = {kind(BoundaryKind::reflective_slip)};
  } else if (name == "double_mach") {
    c = base(name, "double Mach reflection of a Mach 10 shock", Dimension::two);
    c.x0 = 0.0;
    c.x1 = 4.0;
    c.meshes = {{240, 80}};
    c.t_final = 0.2;
    c.bc.xlo = {fixed(double_mach_post())};
    c.bc.xhi = {kind(BoundaryKind::non_reflecting)};
    c.bc.ylo = {segment(fixed(double_mach_post()), -INFINITY, 1.0 / 6.0),
                segment(kind(BoundaryKind::reflective_slip), 1.0 / 6.0, INFINITY)};
    BoundarySpec top = kind(BoundaryKind::moving_shock);
    top.state = double_mach_pre();
    top.mach = 10.0;
    top.angle_deg = 60.0;
    top.x_foot = 1.0 / 6.0;
    c.bc.yhi = {top};
  } else if (name == "flat_plate") {
    c = base(name, "laminar boundary layer over a flat plate", Dimension::two);
    c.x0 = -0.3;
    c.x1 = 1.0;
    c.y0 = 0.0;
    c.y1 = 0.45;
    c.meshes = {{260, 90}};
    c.steady = true;
    c.t_final = 200.0;
    c.recon = ReconVariables::conservative;
    const Primitive inf = flat_plate_free_stream(c.gas.gamma);
    c.gas.mu = inf.rho * inf.u * 1.0 / flat_plate_re;
    c.bc.xlo = {far_field(inf)};
    c.bc.xhi = {far_field(inf)};
    c.bc.yhi = {far_field(inf)};
    c.bc.ylo = {segment(kind(BoundaryKind::symmetric), -INFINITY, 0.0),
                segment(kind(BoundaryKind::no_slip_adiabatic), 0.0, INFINITY)};
    c.reference = ReferenceKind::blasius;
  } else if (name == "cavity") {
    c = base(name, "lid-driven cavity at Re 1000", Dimension::two);
    c.meshes = {{65, 65}};
    c.steady = true;
    c.t_final = 500.0;
    c.recon = ReconVariables::conservative;
    const double t_wall = 1.0 / c.gas.gamma;
    c.gas.mu = cavity_mach / cavity_re;
    BoundarySpec wall = kind(BoundaryKind::no_slip_isothermal);
    wall.t_wall = t_wall;
    BoundarySpec lid = wall;
    lid.wall_velocity = cavity_mach;
    c.bc.xlo = {wall};
    c.bc.xhi = {wall};
    c.bc.ylo = {wall};
    c.bc.yhi = {lid};
    c.reference = ReferenceKind::external_table;
  } else if (name == "viscous_shock_tube") {
    c = base(name, "viscous shock tube at Re 200", Dimension::two);
    c.x0 = 0.0;
    c.x1 = 1.0;
    c.y0 = 0.0;
    c.y1 = 0.5;
    c.meshes = {{500, 250}};
    c.t_final = 1.0;
    c.gas.mu = 1.0 / 200.0;
    c.gas.prandtl = 0.73;
    c.bc.xlo = {kind(BoundaryKind::no_slip_adiabatic)};
    c.bc.xhi = {kind(BoundaryKind::no_slip_adiabatic)};
    c.bc.ylo = {kind(BoundaryKind::no_slip_adiabatic)};
    c.bc.yhi = {kind(BoundaryKind::symmetric)};
  } else {
    throw ConfigError("unknown case '" + name + "'");
  }
  return c;
}

PointState initial_state(const CaseSpec& spec)
{
  const double g = spec.gas.gamma;
  const std::string& id = spec.initializer;
  if (id == "advection")
    return [](double x, double, double) { return prim(1.0 + 0.2 * std::sin(pi * x), 1.0, 0.0, 1.0); };
  if (id == "sod") return [](double x, double, double) { return x < 0.5 ? sod_left : sod_right; };
  if (id == "blast")
    return [](double x, double, double) {
      if (x < 10.0) return prim(1.0, 0.0, 0.0, 1000.0);
      if (x < 90.0) return prim(1.0, 0.0, 0.0, 0.01);
      return prim(1.0, 0.0, 0.0, 100.0);
    };
  if (id == "shu_osher")
    return [](double x, double, double) {
      if (x <= -4.0) return prim(3.857134, 2.629369, 0.0, 10.33333);
      return prim(1.0 + 0.2 * std::sin(5.0 * x), 0.0, 0.0, 1.0);
    };
  if (id == "vortex") return [g](double x, double y, double) { return isentropic_vortex(x, y, g); };
  if (id == "riemann2d_1")
    return [](double x, double y, double) {
      if (x > 0.5 && y > 0.5) return prim(1.5, 0.0, 0.0, 1.5);
      if (x < 0.5 && y > 0.5) return prim(0.5323, 1.206, 0.0, 0.3);
      if (x < 0.5) return prim(0.138, 1.206, 1.206, 0.029);
      return prim(0.5323, 0.0, 1.206, 0.3);
    };
  if (id == "riemann2d_2")
    return [](double x, double y, double) {
      if (x > 0.5 && y > 0.5) return prim(1.0, 0.1, 0.1, 1.0);
      if (x < 0.5 && y > 0.5) return prim(0.5197, -0.6259, 0.1, 0.4);
      if (x < 0.5) return prim(0.8, 0.1, 0.1, 0.4);
      return prim(0.5197, 0.1, -0.6259, 0.4);
    };
  if (id == "shock_vortex") {
    const Primitive up = shock_vortex_upstream(g);
    const Primitive down = stationary_shock_downstream(up, g);
    return [g, up, down](double x, double y, double) {
      if (x >= 0.5) return down;
      constexpr double kappa = 0.3, mu = 0.204, rc = 0.05, xc = 0.25, yc = 0.5;
      const double dx = x - xc, dy = y - yc;
      const double r = std::sqrt(dx * dx + dy * dy);
      const double eta = r / rc;
      const double amp = kappa * eta * std::exp(mu * (1.0 - eta * eta));
      const double th = std::atan2(dy, dx);
      const double T0 = up.p / up.rho;
      const double dT = -(g - 1.0) * kappa * kappa / (4.0 * mu * g) * std::exp(2.0 * mu * (1.0 - eta * eta));
      const double T = T0 + dT;
      const double rho = up.rho * std::pow(T / T0, 1.0 / (g - 1.0));
      return prim(rho, up.u + amp * std::sin(th), up.v - amp * std::cos(th), rho * T);
    };
  }
  if (id == "double_mach")
    return [](double x, double y, double) {
      return x < 1.0 / 6.0 + y / std::sqrt(3.0) ? double_mach_post() : double_mach_pre();
    };
  if (id == "flat_plate") {
    const Primitive inf = flat_plate_free_stream(g);
    return [inf](double, double, double) { return inf; };
  }
  if (id == "cavity") return [g](double, double, double) { return prim(1.0, 0.0, 0.0, 1.0 / g); };
  if (id == "viscous_shock_tube")
    return [g](double x, double, double) {
      return x < 0.5 ? prim(120.0, 0.0, 0.0, 120.0 / g) : prim(1.2, 0.0, 0.0, 1.2 / g);
    };
  throw ConfigError("unknown initializer '" + id + "'");
}

Field cell_averages(const PointState& f, double t, const StructuredGrid& grid, const GasModel& gas)
{
  // Five-point Gauss-Legendre rule on [-1/2, 1/2].
  static const double nodes[5] = {-0.5 * 0.9061798459386640, -0.5 * 0.5384693101056831, 0.0,
                                  0.5 * 0.5384693101056831, 0.5 * 0.9061798459386640};
  static const double weights[5] = {0.5 * 0.2369268850561891, 0.5 * 0.4786286704993665, 0.5 * 0.5688888888888889,
                                    0.5 * 0.4786286704993665, 0.5 * 0.2369268850561891};
  Field out(grid);
  const int ny_pts = grid.two_d() ? 5 : 1;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      Vec4 sum{};
      for (int b = 0; b < ny_pts; ++b) {
        const double y = grid.two_d() ? grid.yc(j) + nodes[b] * grid.dy : grid.yc(j);
        const double wy = grid.two_d() ? weights[b] : 1.0;
        for (int a = 0; a < 5; ++a) {
          const double x = grid.xc(i) + nodes[a] * grid.dx;
          sum += (weights[a] * wy) * conserved_from_primitive(f(x, y, t), gas).vec();
        }
      }
      out(i, j) = sum;
    }
  }
  return out;
}

Field init_case(const CaseSpec& spec, const StructuredGrid& grid)
{
  return cell_averages(initial_state(spec), 0.0, grid, spec.gas);
}

ReferenceSolution reference_solution(const CaseSpec& spec)
{
  ReferenceSolution r;
  r.kind = spec.reference;
  const double g = spec.gas.gamma;
  switch (spec.reference) {
  case ReferenceKind::advected_wave:
    r.eval = [](double x, double, double t) { return prim(1.0 + 0.2 * std::sin(pi * (x - t)), 1.0, 0.0, 1.0); };
    break;
  case ReferenceKind::exact_riemann:
    r.eval = [g](double x, double, double t) {
      if (t <= 0.0) return x < 0.5 ? sod_left : sod_right;
      return exact_riemann(sod_left, sod_right, (x - 0.5) / t, g);
    };
    break;
  case ReferenceKind::isentropic_vortex: {
    const double x0 = spec.x0, x1 = spec.x1, y0 = spec.y0, y1 = spec.y1;
    r.eval = [g, x0, x1, y0, y1](double x, double y, double t) {
      return isentropic_vortex(wrap(x - t, x0, x1), wrap(y - t, y0, y1), g);
    };
    break;
  }
  default: break;
  }
  return r;
}

} // namespace gks
