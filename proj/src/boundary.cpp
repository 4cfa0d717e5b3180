#include "gks/boundary.hpp"

#include <cmath>
#include <numbers>

#include "gks/errors.hpp"

namespace gks {

namespace {

struct KindName
{
  BoundaryKind kind;
  const char* name;
};

constexpr KindName kind_names[] = {
    {BoundaryKind::periodic, "periodic"},
    {BoundaryKind::reflective_slip, "reflective_slip"},
    {BoundaryKind::symmetric, "symmetric"},
    {BoundaryKind::non_reflecting, "non_reflecting"},
    {BoundaryKind::no_slip_adiabatic, "no_slip_adiabatic"},
    {BoundaryKind::no_slip_isothermal, "no_slip_isothermal"},
    {BoundaryKind::dirichlet_fixed, "dirichlet_fixed"},
    {BoundaryKind::moving_shock, "moving_shock"},
};

} // namespace

std::string to_string(BoundaryKind kind)
{
  for (const auto& k : kind_names)
    if (k.kind == kind) return k.name;
  return "unknown";
}

BoundaryKind boundary_kind_from_string(const std::string& name)
{
  for (const auto& k : kind_names)
    if (name == k.name) return k.kind;
  throw ConfigError("unknown boundary kind '" + name + "'");
}

void BoundarySpec::validate() const
{
  if (kind == BoundaryKind::no_slip_isothermal && !(t_wall > 0.0))
    throw ConfigError("isothermal wall needs t_wall > 0");
  if (kind == BoundaryKind::moving_shock && !(mach > 1.0)) throw ConfigError("moving shock needs mach > 1");
  if (kind == BoundaryKind::dirichlet_fixed && !state && !profile) throw ConfigError("dirichlet_fixed boundary needs a state");
  if (kind == BoundaryKind::moving_shock && !state)
    throw ConfigError(to_string(kind) + " boundary needs a state");
  if (!(from < to)) throw ConfigError("boundary segment must satisfy from < to");
}

BoundarySet BoundarySet::all(const BoundarySpec& spec) { return {{spec}, {spec}, {spec}, {spec}}; }

std::vector<BoundarySpec>& BoundarySet::side(Side s)
{
  switch (s) {
  case Side::xlo: return xlo;
  case Side::xhi: return xhi;
  case Side::ylo: return ylo;
  default: return yhi;
  }
}

const std::vector<BoundarySpec>& BoundarySet::side(Side s) const { return const_cast<BoundarySet*>(this)->side(s); }

void BoundarySet::validate(const StructuredGrid& grid) const
{
  const Side sides[] = {Side::xlo, Side::xhi, Side::ylo, Side::yhi};
  const char* names[] = {"xlo", "xhi", "ylo", "yhi"};
  for (int s = 0; s < (grid.two_d() ? 4 : 2); ++s) {
    const auto& specs = side(sides[s]);
    if (specs.empty()) throw ConfigError(std::string("no boundary condition for side ") + names[s]);
    for (const auto& b : specs) b.validate();
  }
  auto periodic = [&](Side s) {
    for (const auto& b : side(s))
      if (b.kind == BoundaryKind::periodic) return true;
    return false;
  };
  if (periodic(Side::xlo) != periodic(Side::xhi)) throw ConfigError("periodic x boundaries must be paired");
  if (grid.two_d() && periodic(Side::ylo) != periodic(Side::yhi))
    throw ConfigError("periodic y boundaries must be paired");
}

Primitive post_shock_state(const Primitive& pre, double ms, double normal_angle_rad, const GasModel& gas)
{
  const double g = gas.gamma;
  const double m2 = ms * ms;
  const double rho = pre.rho * (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0);
  const double p = pre.p * (2.0 * g * m2 - (g - 1.0)) / (g + 1.0);
  const double ws = ms * sound_speed(pre, gas);
  const double un = ws * (1.0 - pre.rho / rho);
  return Primitive::from_rho_u_v_p(rho, un * std::cos(normal_angle_rad), un * std::sin(normal_angle_rad), p);
}

double moving_shock_position(const BoundarySpec& spec, double y, double t, const GasModel& gas)
{
  const double th = spec.angle_deg * std::numbers::pi / 180.0;
  const double ws = spec.mach * sound_speed(*spec.state, gas);
  return spec.x_foot + y / std::tan(th) + ws * t / std::sin(th);
}

namespace {

struct Ctx
{
  Field& f;
  const StructuredGrid& g;
  const GasModel& gas;
  double t;
};

// Cell (i, j) at depth d from the wall on side s along line l (d < 0 ghosts).
struct Cell
{
  int i, j;
};

Cell cell_at(const StructuredGrid& g, Side s, int line, int d)
{
  switch (s) {
  case Side::xlo: return {d, line};
  case Side::xhi: return {g.nx - 1 - d, line};
  case Side::ylo: return {line, d};
  default: return {line, g.ny - 1 - d};
  }
}

Side opposite(Side s)
{
  switch (s) {
  case Side::xlo: return Side::xhi;
  case Side::xhi: return Side::xlo;
  case Side::ylo: return Side::yhi;
  default: return Side::ylo;
  }
}

bool x_side(Side s) { return s == Side::xlo || s == Side::xhi; }

const BoundarySpec* find_segment(const std::vector<BoundarySpec>& specs, double pos)
{
  for (const auto& b : specs)
    if (pos >= b.from && pos < b.to) return &b;
  // Positions outside every segment (corner ghosts) take the nearest end.
  const BoundarySpec* best = nullptr;
  double dist = std::numeric_limits<double>::infinity();
  for (const auto& b : specs) {
    const double d = pos < b.from ? b.from - pos : pos - b.to;
    if (d < dist) {
      dist = d;
      best = &b;
    }
  }
  return best;
}

Vec4 mirrored(const Vec4& w, int normal)
{
  Vec4 r = w;
  r[normal] = -r[normal];
  return r;
}

Vec4 no_slip(const Vec4& w, int normal, int tangential, double wall_u, const GasModel& gas, const double* t_wall)
{
  const Primitive p = primitive_from_conserved(w, gas);
  double vel[3] = {0.0, p.u, p.v};
  const double un = -vel[normal];
  const double ut = 2.0 * wall_u - vel[tangential];
  double rho = p.rho;
  if (t_wall) {
    double tg = 2.0 * *t_wall - p.p / p.rho;
    if (!(tg > 0.0)) tg = *t_wall;
    rho = p.p / tg;
  }
  double out[3] = {0.0, 0.0, 0.0};
  out[normal] = un;
  out[tangential] = ut;
  return conserved_from_primitive(Primitive::from_rho_u_v_p(rho, out[1], out[2], p.p), gas).vec();
}

// Three-point Gauss average of a point state over one ghost cell.
Vec4 ghost_average(const std::function<Primitive(double, double)>& f, const StructuredGrid& g, const Cell& q,
                   const GasModel& gas)
{
  static constexpr double node[3] = {-0.3872983346207417, 0.0, 0.3872983346207417};
  static constexpr double weight[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  const double xc = g.xc(q.i);
  Vec4 acc{};
  if (!g.two_d()) {
    for (int a = 0; a < 3; ++a) acc += weight[a] * conserved_from_primitive(f(xc + node[a] * g.dx, 0.0), gas).vec();
    return acc;
  }
  const double yc = g.yc(q.j);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      acc += weight[a] * weight[b] *
             conserved_from_primitive(f(xc + node[a] * g.dx, yc + node[b] * g.dy), gas).vec();
  return acc;
}

// Boundary state from 1D Riemann invariants along the outward normal.
Vec4 riemann_invariant_state(const Vec4& interior, const Primitive& far, int normal, double sign, const GasModel& gas)
{
  const double g = gas.gamma;
  const Primitive in = primitive_from_conserved(interior, gas);
  const double vi[3] = {0.0, in.u, in.v};
  const double vf[3] = {0.0, far.u, far.v};
  const int tangential = normal == 1 ? 2 : 1;
  const double un_i = sign * vi[normal];
  const double un_f = sign * vf[normal];
  const double c_i = sound_speed(in, gas);
  const double c_f = sound_speed(far, gas);
  if (un_i >= c_i) return interior;
  if (un_f <= -c_f) return conserved_from_primitive(far, gas).vec();
  const double rp = un_i + 2.0 * c_i / (g - 1.0);
  const double rm = un_f - 2.0 * c_f / (g - 1.0);
  const double un = 0.5 * (rp + rm);
  const double c = 0.25 * (g - 1.0) * (rp - rm);
  const bool outflow = un > 0.0;
  const double s = outflow ? in.p / std::pow(in.rho, g) : far.p / std::pow(far.rho, g);
  const double ut = outflow ? vi[tangential] : vf[tangential];
  const double rho = std::pow(c * c / (g * s), 1.0 / (g - 1.0));
  const double p = rho * c * c / g;
  double vel[3] = {0.0, 0.0, 0.0};
  vel[normal] = sign * un;
  vel[tangential] = ut;
  return conserved_from_primitive(Primitive::from_rho_u_v_p(rho, vel[1], vel[2], p), gas).vec();
}

void fill_line(const Ctx& c, Side s, int line, const BoundarySpec& b)
{
  const int normal = x_side(s) ? 1 : 2;
  const int tangential = normal == 1 ? 2 : 1;
  const int g = StructuredGrid::ghost;
  Field& f = c.f;
  auto at = [&](int d) -> Vec4& {
    const Cell q = cell_at(c.g, s, line, d);
    return f(q.i, q.j);
  };
  switch (b.kind) {
  case BoundaryKind::periodic: {
    const Side o = opposite(s);
    for (int k = 0; k < g; ++k) {
      const Cell q = cell_at(c.g, o, line, k);
      at(-1 - k) = f(q.i, q.j);
    }
    break;
  }
  case BoundaryKind::reflective_slip:
  case BoundaryKind::symmetric:
    for (int k = 0; k < g; ++k) at(-1 - k) = mirrored(at(k), normal);
    break;
  case BoundaryKind::no_slip_adiabatic:
    for (int k = 0; k < g; ++k) at(-1 - k) = no_slip(at(k), normal, tangential, b.wall_velocity, c.gas, nullptr);
    break;
  case BoundaryKind::no_slip_isothermal:
    for (int k = 0; k < g; ++k) at(-1 - k) = no_slip(at(k), normal, tangential, b.wall_velocity, c.gas, &b.t_wall);
    break;
  case BoundaryKind::non_reflecting: {
    Vec4 w = at(0);
    if (b.state) {
      const double sign = (s == Side::xhi || s == Side::yhi) ? 1.0 : -1.0;
      w = riemann_invariant_state(w, *b.state, normal, sign, c.gas);
    }
    for (int k = 0; k < g; ++k) at(-1 - k) = w;
    break;
  }
  case BoundaryKind::dirichlet_fixed: {
    if (b.profile) {
      for (int k = 0; k < g; ++k) {
        const Cell q = cell_at(c.g, s, line, -1 - k);
        at(-1 - k) = ghost_average(b.profile, c.g, q, c.gas);
      }
      break;
    }
    const Vec4 w = conserved_from_primitive(*b.state, c.gas).vec();
    for (int k = 0; k < g; ++k) at(-1 - k) = w;
    break;
  }
  case BoundaryKind::moving_shock: {
    const double th = b.angle_deg * std::numbers::pi / 180.0;
    const Primitive post = post_shock_state(*b.state, b.mach, th - 0.5 * std::numbers::pi, c.gas);
    const Vec4 w_post = conserved_from_primitive(post, c.gas).vec();
    const Vec4 w_pre = conserved_from_primitive(*b.state, c.gas).vec();
    for (int k = 0; k < g; ++k) {
      const Cell q = cell_at(c.g, s, line, -1 - k);
      const double x = c.g.xc(q.i), y = c.g.yc(q.j);
      at(-1 - k) = x < moving_shock_position(b, y, c.t, c.gas) ? w_post : w_pre;
    }
    break;
  }
  }
}

void fill_side(const Ctx& c, Side s, const std::vector<BoundarySpec>& specs)
{
  const bool xs = x_side(s);
  const int lo = xs ? 0 : -StructuredGrid::ghost;
  const int hi = xs ? c.g.ny : c.g.nx + StructuredGrid::ghost;
  for (int line = lo; line < hi; ++line) {
    const double pos = xs ? c.g.yc(line) : c.g.xc(line);
    fill_line(c, s, line, *find_segment(specs, pos));
  }
}

} // namespace

void fill_ghost(Field& field, const BoundarySet& bc, double t, const GasModel& gas)
{
  const StructuredGrid& g = field.grid();
  bc.validate(g);
  const Ctx c{field, g, gas, t};
  fill_side(c, Side::xlo, bc.xlo);
  fill_side(c, Side::xhi, bc.xhi);
  if (g.two_d()) {
    fill_side(c, Side::ylo, bc.ylo);
    fill_side(c, Side::yhi, bc.yhi);
  }
}

} // namespace gks
