#include "gks/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "gks/boundary.hpp"
#include "gks/errors.hpp"
#include "gks/integrator.hpp"
#include "gks/oracles.hpp"
#include "gks/parallel.hpp"

namespace gks {

SolverOptions SolverOptions::for_case(const CaseSpec& spec)
{
  SolverOptions o;
  o.cfl = spec.cfl;
  o.recon = spec.recon;
  o.collision = CollisionModel::from_gas(spec.gas);
  o.steady = spec.steady;
  o.steady_tol = spec.steady_tol;
  return o;
}

double Diagnostics::relative_drift() const
{
  double d = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double scale = std::max(std::abs(initial_totals[k]), 1e-300);
    d = std::max(d, std::abs(totals[k] - initial_totals[k]) / scale);
  }
  return d;
}

namespace {

inline Vec4 to_local_y(const Vec4& w) { return {w[0], w[2], w[1], w[3]}; }

struct PointFlux
{
  Vec4 half{};
  Vec4 full{};
};

PointFlux point_flux(const FacePoint& p, const GasModel& gas, const CollisionModel& model, double dt, bool half)
{
  const FluxAssembly fa = assemble_flux(p.left, p.right, p.dw0_n, gas, model, dt, gas.prandtl != 1.0);
  PointFlux out;
  out.full = prandtl_correction(time_integrated_flux(fa, dt), fa, gas.prandtl).f;
  if (half) out.half = prandtl_correction(time_integrated_flux(fa, 0.5 * dt), fa, gas.prandtl).f;
  return out;
}

} // namespace

Solver::Solver(CaseSpec spec, const StructuredGrid& grid, SolverOptions options)
    : spec_(std::move(spec)), grid_(grid), options_(options)
{
  spec_.gas.validate();
  grid_.validate();
  spec_.bc.validate(grid_);
  if (grid_.dim != spec_.gas.dim) throw ConfigError("grid and gas model dimensions differ");
  if (!(options_.cfl > 0.0)) throw ConfigError("cfl must be positive");
  if (options_.workers < 1) options_.workers = 1;
  if (options_.collision.mode == CollisionMode::viscous && !spec_.gas.viscous())
    throw ConfigError("viscous collision model needs a viscosity");
}

RunState Solver::initial_state() const { return state_from(init_case(spec_, grid_)); }

RunState Solver::state_from(Field field, double t, long step) const
{
  RunState run;
  run.t = t;
  run.step = step;
  run.field = std::move(field);
  const auto [rho, p] = check_physical(run.field, spec_.gas, "initial field", step);
  run.diag.min_rho = rho;
  run.diag.min_p = p;
  run.diag.initial_totals = run.field.totals();
  run.diag.totals = run.diag.initial_totals;
  return run;
}

double Solver::time_step(const RunState& run) const
{
  if (options_.fixed_dt) return *options_.fixed_dt;
  return cfl_time_step(run.field, spec_.gas, options_.cfl, options_.viscous_bound);
}

FaceFluxes Solver::window_fluxes(Field& w, double t, double dt, bool half, long long* fallbacks) const
{
  fill_ghost(w, spec_.bc, t, spec_.gas);
  const StructuredGrid& g = grid_;
  const GasModel& gas = spec_.gas;
  const CollisionModel& model = options_.collision;
  const ReconVariables vars = options_.recon;
  const int nx = g.nx, ny = g.ny;
  const int workers = options_.workers;

  FaceFluxes out;
  const std::size_t nfx = static_cast<std::size_t>(nx + 1) * ny;
  out.x_full.assign(nfx, Vec4{});
  if (half) out.x_half.assign(nfx, Vec4{});

  if (!g.two_d()) {
    std::vector<char> fb(static_cast<std::size_t>(nx + 1), 0);
    parallel_for(nx + 1, workers, [&](int i) {
      FaceStencil s;
      for (int k = 0; k < 6; ++k) s[k] = w(i - 3 + k, 0);
      const FaceTrace tr = reconstruct_normal(s, g.dx, gas, vars);
      fb[i] = tr.fallback;
      const PointFlux f = point_flux(face_point_1d(tr, gas), gas, model, dt, half);
      out.x_full[i] = f.full;
      if (half) out.x_half[i] = f.half;
    });
    if (fallbacks)
      for (char c : fb) *fallbacks += c;
    return out;
  }

  const GaussLine gauss = GaussLine::standard();
  const std::size_t nfy = static_cast<std::size_t>(nx) * (ny + 1);
  out.y_full.assign(nfy, Vec4{});
  if (half) out.y_half.assign(nfy, Vec4{});

  // x faces: normal traces on rows -2..ny+1, then the tangential pass.
  {
    const int rows = ny + 4;
    const std::size_t stride = static_cast<std::size_t>(nx + 1);
    std::vector<FaceTrace> traces(static_cast<std::size_t>(rows) * stride);
    std::vector<long long> fb(static_cast<std::size_t>(rows), 0);
    parallel_for(rows, workers, [&](int r) {
      const int j = r - 2;
      for (int i = 0; i <= nx; ++i) {
        FaceStencil s;
        for (int k = 0; k < 6; ++k) s[k] = w(i - 3 + k, j);
        FaceTrace& tr = traces[static_cast<std::size_t>(r) * stride + i];
        tr = reconstruct_normal(s, g.dx, gas, vars);
        fb[r] += tr.fallback;
      }
    });
    parallel_for(ny, workers, [&](int j) {
      for (int i = 0; i <= nx; ++i) {
        std::array<FaceTrace, 5> col;
        for (int k = 0; k < 5; ++k) col[k] = traces[static_cast<std::size_t>(j + k) * stride + i];
        const auto pts = reconstruct_tangential(col, g.dy, gauss, gas);
        Vec4 full{}, hf{};
        for (int q = 0; q < 3; ++q) {
          const PointFlux f = point_flux(pts[q], gas, model, dt, half);
          full += gauss.weights[q] * f.full;
          if (half) hf += gauss.weights[q] * f.half;
        }
        const std::size_t idx = static_cast<std::size_t>(j) * stride + i;
        out.x_full[idx] = full;
        if (half) out.x_half[idx] = hf;
      }
    });
    if (fallbacks)
      for (long long c : fb) *fallbacks += c;
  }

  // y faces in the rotated frame (normal momentum first).
  {
    const int cols = nx + 4;
    const std::size_t stride = static_cast<std::size_t>(ny + 1);
    std::vector<FaceTrace> traces(static_cast<std::size_t>(cols) * stride);
    std::vector<long long> fb(static_cast<std::size_t>(cols), 0);
    parallel_for(cols, workers, [&](int c) {
      const int i = c - 2;
      for (int j = 0; j <= ny; ++j) {
        FaceStencil s;
        for (int k = 0; k < 6; ++k) s[k] = to_local_y(w(i, j - 3 + k));
        FaceTrace& tr = traces[static_cast<std::size_t>(c) * stride + j];
        tr = reconstruct_normal(s, g.dy, gas, vars);
        fb[c] += tr.fallback;
      }
    });
    parallel_for(ny + 1, workers, [&](int j) {
      for (int i = 0; i < nx; ++i) {
        std::array<FaceTrace, 5> row;
        for (int k = 0; k < 5; ++k) row[k] = traces[static_cast<std::size_t>(i + k) * stride + j];
        const auto pts = reconstruct_tangential(row, g.dx, gauss, gas);
        Vec4 full{}, hf{};
        for (int q = 0; q < 3; ++q) {
          const PointFlux f = point_flux(pts[q], gas, model, dt, half);
          full += gauss.weights[q] * f.full;
          if (half) hf += gauss.weights[q] * f.half;
        }
        const std::size_t idx = static_cast<std::size_t>(j) * nx + i;
        out.y_full[idx] = to_local_y(full);
        if (half) out.y_half[idx] = to_local_y(hf);
      }
    });
    if (fallbacks)
      for (long long c : fb) *fallbacks += c;
  }
  return out;
}

void Solver::apply_fluxes(Field& out, const Field& base, const std::vector<Vec4>& fx, const std::vector<Vec4>& fy,
                          double scale) const
{
  const StructuredGrid& g = grid_;
  const int nx = g.nx;
  const double sx = scale / g.dx;
  const double sy = scale / g.dy;
  parallel_for(g.ny, options_.workers, [&](int j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t ix = static_cast<std::size_t>(j) * (nx + 1) + i;
      Vec4 w = base(i, j);
      w -= sx * (fx[ix + 1] - fx[ix]);
      if (g.two_d()) {
        const std::size_t iy = static_cast<std::size_t>(j) * nx + i;
        w -= sy * (fy[iy + nx] - fy[iy]);
      }
      out(i, j) = w;
    }
  });
}

std::pair<double, double> check_physical(const Field& field, const GasModel& gas, const char* where, long step)
{
  const StructuredGrid& g = field.grid();
  double rho_min = std::numeric_limits<double>::infinity();
  double p_min = std::numeric_limits<double>::infinity();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const Vec4& w = field(i, j);
      const double ke = 0.5 * (w[1] * w[1] + w[2] * w[2]) / w[0];
      const double p = (gas.gamma - 1.0) * (w[3] - ke);
      if (!(w[0] > 0.0) || !(p > 0.0) || !std::isfinite(p)) {
        std::ostringstream msg;
        msg << "non-physical state in " << where << " at step " << step << ", cell (" << i << ", " << j
            << "): rho=" << w[0] << " p=" << p;
        throw NonPhysicalState(msg.str());
      }
      rho_min = std::min(rho_min, w[0]);
      p_min = std::min(p_min, p);
    }
  }
  return {rho_min, p_min};
}

void Solver::step(RunState& run, double dt) const
{
  if (!(dt > 0.0) || !std::isfinite(dt)) throw NonPhysicalState("non-positive or non-finite time step");
  const StructuredGrid& g = grid_;
  const GasModel& gas = spec_.gas;
  Field& wn = run.field;
  long long fallbacks = 0;
  const Vec4 before = wn.totals();

  Field next(g);
  if (options_.scheme == TimeScheme::single_window) {
    const FaceFluxes f = window_fluxes(wn, run.t, dt, false, &fallbacks);
    apply_fluxes(next, wn, f.x_full, f.y_full, 1.0);
  } else {
    const FaceFluxes fn = window_fluxes(wn, run.t, dt, true, &fallbacks);
    Field star(g);
    apply_fluxes(star, wn, fn.x_half, fn.y_half, 1.0);
    const auto [r1, p1] = check_physical(star, gas, "intermediate stage", run.step + 1);
    run.diag.min_rho = std::min(run.diag.min_rho, r1);
    run.diag.min_p = std::min(run.diag.min_p, p1);

    const FaceFluxes fs = window_fluxes(star, run.t + 0.5 * dt, dt, true, &fallbacks);
    auto combine = [&](const std::vector<Vec4>& nh, const std::vector<Vec4>& nf, const std::vector<Vec4>& sh,
                       const std::vector<Vec4>& sf) {
      std::vector<Vec4> out(nf.size());
      for (std::size_t k = 0; k < nf.size(); ++k) {
        const FluxPair a = linear_flux_coefficients(nh[k], nf[k], dt);
        const FluxPair b = linear_flux_coefficients(sh[k], sf[k], dt);
        out[k] = two_stage_flux(a, b, dt);
      }
      return out;
    };
    const std::vector<Vec4> fx = combine(fn.x_half, fn.x_full, fs.x_half, fs.x_full);
    const std::vector<Vec4> fy = combine(fn.y_half, fn.y_full, fs.y_half, fs.y_full);
    apply_fluxes(next, wn, fx, fy, dt);
  }
  const auto [r2, p2] = check_physical(next, gas, "update", run.step + 1);

  double res = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double d = next(i, j)[0] - wn(i, j)[0];
      res += d * d;
    }
  res = std::sqrt(res / static_cast<double>(g.cells()));

  wn.assign_interior(next);
  run.t += dt;
  run.step += 1;
  Diagnostics& d = run.diag;
  d.min_rho = std::min(d.min_rho, r2);
  d.min_p = std::min(d.min_p, p2);
  d.fallback_faces += fallbacks;
  d.last_residual = res;
  d.totals = wn.totals();
  for (int k = 0; k < 4; ++k) {
    const double scale = std::max(std::abs(before[k]), 1e-300);
    d.max_step_drift = std::max(d.max_step_drift, std::abs(d.totals[k] - before[k]) / scale);
  }
  if (options_.diag_every > 0 && run.step % options_.diag_every == 0)
    d.history.push_back({run.step, run.t, dt, r2, p2, res, d.totals});
}

void Solver::advance_to(RunState& run, double t_final) const
{
  if (t_final < run.t) throw ConfigError("advance_to: final time is before the current time");
  // Relative slack absorbs roundoff in the accumulated time.
  const double slack = 1e-12 * std::max(1.0, std::abs(t_final));
  while (run.t < t_final - slack) {
    if (options_.max_steps >= 0 && run.step >= options_.max_steps) break;
    double dt = time_step(run);
    if (run.t + dt > t_final) dt = t_final - run.t;
    step(run, dt);
    if (options_.steady && run.diag.last_residual < options_.steady_tol) {
      run.diag.converged = true;
      break;
    }
  }
  if (!options_.steady && std::abs(run.t - t_final) <= slack) run.t = t_final;
}

std::vector<ConvergenceRow> run_convergence_study(const CaseSpec& spec, const SolverOptions& options)
{
  const ReferenceSolution ref = reference_solution(spec);
  if (!ref.available()) throw ConfigError("case " + spec.name + " has no reference solution");
  std::vector<ConvergenceRow> rows;
  for (const Mesh& m : spec.meshes) {
    const StructuredGrid g = spec.grid(m);
    const Solver solver(spec, g, options);
    RunState run = solver.initial_state();
    solver.advance_to(run, spec.t_final);
    const Field exact = cell_averages(ref.eval, spec.t_final, g, spec.gas);
    ConvergenceRow r;
    r.mesh = m;
    r.l1 = error_norm(run.field, exact, Norm::L1, 0, spec.norm_scale);
    r.l2 = error_norm(run.field, exact, Norm::L2, 0, spec.norm_scale);
    r.linf = error_norm(run.field, exact, Norm::Linf, 0, spec.norm_scale);
    r.steps = run.step;
    rows.push_back(r);
  }
  for (std::size_t k = 1; k < rows.size(); ++k) {
    auto order = [](double a, double b) -> std::optional<double> {
      if (!(a > 0.0) || !(b > 0.0)) return std::nullopt;
      return std::log2(a / b);
    };
    rows[k].order_l1 = order(rows[k - 1].l1, rows[k].l1);
    rows[k].order_l2 = order(rows[k - 1].l2, rows[k].l2);
    rows[k].order_linf = order(rows[k - 1].linf, rows[k].linf);
  }
  return rows;
}

void write_checkpoint(const RunState& run, const std::string& case_name, const std::string& path)
{
  std::ofstream out(path);
  if (!out) throw IoError("cannot write checkpoint '" + path + "'");
  const StructuredGrid& g = run.field.grid();
  char buf[64];
  auto hex = [&](double v) {
    std::snprintf(buf, sizeof buf, "%a", v);
    return std::string(buf);
  };
  out << "gks-checkpoint 1\n";
  out << "case " << case_name << "\n";
  out << "dim " << static_cast<int>(g.dim) << " " << g.nx << " " << g.ny << "\n";
  out << "extent " << hex(g.x0) << " " << hex(g.x1) << " " << hex(g.y0) << " " << hex(g.y1) << "\n";
  out << "time " << hex(run.t) << " " << run.step << "\n";
  out << "data\n";
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const Vec4& w = run.field(i, j);
      out << hex(w[0]) << " " << hex(w[1]) << " " << hex(w[2]) << " " << hex(w[3]) << "\n";
    }
  out << "end\n";
  if (!out) throw IoError("error writing checkpoint '" + path + "'");
}

RunState read_checkpoint(const std::string& path, std::string* case_name)
{
  std::ifstream in(path);
  if (!in) throw IoError("cannot open checkpoint '" + path + "'");
  auto fail = [&](const std::string& what) { return IoError("checkpoint '" + path + "': " + what); };
  auto num = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw fail("bad number '" + s + "'");
    return v;
  };
  std::string tag, word;
  int version = 0;
  if (!(in >> tag >> version) || tag != "gks-checkpoint") throw fail("missing header");
  if (version != 1) throw fail("unsupported version " + std::to_string(version));
  std::string name;
  if (!(in >> tag >> name) || tag != "case") throw fail("missing case line");
  int dim = 0, nx = 0, ny = 0;
  if (!(in >> tag >> dim >> nx >> ny) || tag != "dim") throw fail("missing dim line");
  std::string a, b, c, d;
  if (!(in >> tag >> a >> b >> c >> d) || tag != "extent") throw fail("missing extent line");
  std::string ts;
  long step = 0;
  if (!(in >> tag >> ts >> step) || tag != "time") throw fail("missing time line");
  if (!(in >> tag) || tag != "data") throw fail("missing data line");
  const StructuredGrid g = dim == 1 ? StructuredGrid::line(nx, num(a), num(b))
                                    : StructuredGrid::plane(nx, ny, num(a), num(b), num(c), num(d));
  RunState run;
  run.field = Field(g);
  run.t = num(ts);
  run.step = step;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      Vec4& w = run.field(i, j);
      for (int k = 0; k < 4; ++k) {
        if (!(in >> word)) throw fail("truncated data");
        w[k] = num(word);
      }
    }
  if (!(in >> tag) || tag != "end") throw fail("missing end marker");
  if (case_name) *case_name = name;
  run.diag.initial_totals = run.field.totals();
  run.diag.totals = run.diag.initial_totals;
  return run;
}

} // namespace gks
