#include "gks/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "gks/cases.hpp"
#include "gks/config.hpp"
#include "gks/errors.hpp"
#include "gks/output.hpp"
#include "gks/solver.hpp"

namespace gks {

namespace {

std::string num(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

std::string ext(OutputFormat f) { return f == OutputFormat::csv ? ".csv" : ".vtk"; }

struct Overrides
{
  std::string config;
  std::string out_dir;
  int workers = 0;
  std::string format;
};

RunConfig load_with_overrides(const Overrides& o)
{
  if (o.config.empty()) throw ConfigError("no config file given");
  RunConfig cfg = load_config(o.config);
  if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
  if (o.workers > 0) cfg.workers = o.workers;
  if (o.format == "csv") cfg.format = OutputFormat::csv;
  else if (o.format == "vtk") cfg.format = OutputFormat::vtk;
  else if (!o.format.empty()) throw ConfigError("--format must be csv or vtk");
  return cfg;
}

std::string diagnostics_csv(const Diagnostics& d)
{
  std::string s = "step,t,dt,min_rho,min_p,residual,mass,mom_x,mom_y,energy\n";
  for (const auto& r : d.history) {
    s += std::to_string(r.step) + "," + num(r.t) + "," + num(r.dt) + "," + num(r.min_rho) + "," + num(r.min_p) +
         "," + num(r.residual);
    for (double v : r.totals) s += "," + num(v);
    s += "\n";
  }
  return s;
}

std::string summary_text(const CaseSpec& spec, const StructuredGrid& g, const SolverOptions& o, const RunState& run)
{
  std::ostringstream s;
  s << "case = " << spec.name << "\n";
  s << "nx = " << g.nx << "\n";
  s << "ny = " << g.ny << "\n";
  s << "cfl = " << num(o.cfl) << "\n";
  s << "scheme = " << to_string(o.scheme) << "\n";
  s << "recon = " << to_string(o.recon) << "\n";
  s << "t = " << num(run.t) << "\n";
  s << "steps = " << run.step << "\n";
  s << "min_rho = " << num(run.diag.min_rho) << "\n";
  s << "min_p = " << num(run.diag.min_p) << "\n";
  s << "relative_drift = " << num(run.diag.relative_drift()) << "\n";
  s << "max_step_drift = " << num(run.diag.max_step_drift) << "\n";
  s << "fallback_faces = " << run.diag.fallback_faces << "\n";
  s << "last_residual = " << num(run.diag.last_residual) << "\n";
  s << "converged = " << (run.diag.converged ? "true" : "false") << "\n";
  return s.str();
}

int cmd_run(const Overrides& ov, std::ostream& out)
{
  const RunConfig cfg = load_with_overrides(ov);
  const CaseSpec spec = build_case(cfg);
  const SolverOptions opt = build_options(cfg, spec);
  const StructuredGrid g = spec.grid();
  const Solver solver(spec, g, opt);

  RunState run;
  if (!cfg.restart.empty()) {
    std::string name;
    RunState loaded = read_checkpoint(cfg.restart, &name);
    if (name != spec.name) throw ConfigError("checkpoint is for case '" + name + "', not '" + spec.name + "'");
    const StructuredGrid& lg = loaded.field.grid();
    if (lg.nx != g.nx || lg.ny != g.ny) throw ConfigError("checkpoint mesh does not match the configured mesh");
    Field f(g);
    f.assign_interior(loaded.field);
    run = solver.state_from(std::move(f), loaded.t, loaded.step);
  } else {
    run = solver.initial_state();
  }

  const std::string dir = cfg.out_dir;
  std::filesystem::create_directories(dir);
  if (cfg.output_every > 0) {
    SolverOptions chunk = opt;
    while (run.t < spec.t_final && !run.diag.converged) {
      chunk.max_steps = run.step + cfg.output_every;
      if (opt.max_steps >= 0) chunk.max_steps = std::min(chunk.max_steps, opt.max_steps);
      const Solver part(spec, g, chunk);
      const long before = run.step;
      part.advance_to(run, spec.t_final);
      char name[64];
      std::snprintf(name, sizeof name, "/field_%06ld", run.step);
      write_field(run.field, spec.gas, cfg.format, dir + name + ext(cfg.format));
      if (run.step == before || (opt.max_steps >= 0 && run.step >= opt.max_steps)) break;
    }
  } else {
    solver.advance_to(run, spec.t_final);
  }

  write_field(run.field, spec.gas, cfg.format, dir + "/field" + ext(cfg.format));
  write_text(dir + "/diagnostics.csv", diagnostics_csv(run.diag));
  write_text(dir + "/summary.txt", summary_text(spec, g, opt, run));
  if (!cfg.checkpoint.empty()) write_checkpoint(run, spec.name, cfg.checkpoint);
  out << "case " << spec.name << ": t = " << num(run.t) << " after " << run.step << " steps, min rho "
      << short_num(run.diag.min_rho) << ", min p " << short_num(run.diag.min_p) << "\n";
  out << "output written to " << dir << "\n";
  return exit_ok;
}

int cmd_convergence(const Overrides& ov, std::ostream& out)
{
  const RunConfig cfg = load_with_overrides(ov);
  const CaseSpec spec = build_case(cfg);
  const SolverOptions opt = build_options(cfg, spec);
  const auto rows = run_convergence_study(spec, opt);

  auto opt_num = [](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
  std::string csv = "nx,ny,l1,l1_order,l2,l2_order,linf,linf_order,steps\n";
  for (const auto& r : rows)
    csv += std::to_string(r.mesh.nx) + "," + std::to_string(r.mesh.ny) + "," + num(r.l1) + "," + opt_num(r.order_l1) +
           "," + num(r.l2) + "," + opt_num(r.order_l2) + "," + num(r.linf) + "," + opt_num(r.order_linf) + "," +
           std::to_string(r.steps) + "\n";
  std::filesystem::create_directories(cfg.out_dir);
  write_text(cfg.out_dir + "/convergence.csv", csv);

  out << "convergence study: " << spec.name << " (t = " << spec.t_final << ", cfl = " << opt.cfl << ", "
      << to_string(opt.scheme) << ", " << to_string(spec.norm_scale) << " norms)\n";
  out << std::left << std::setw(12) << "mesh" << std::setw(14) << "L1" << std::setw(10) << "order" << std::setw(14)
      << "L2" << std::setw(10) << "order" << std::setw(14) << "Linf" << "order\n";
  auto ord = [](const std::optional<double>& v) {
    if (!v) return std::string("-");
    char b[16];
    std::snprintf(b, sizeof b, "%.4f", *v);
    return std::string(b);
  };
  for (const auto& r : rows) {
    const std::string mesh =
        spec.dim == Dimension::two ? std::to_string(r.mesh.nx) + "x" + std::to_string(r.mesh.ny)
                                   : std::to_string(r.mesh.nx);
    out << std::left << std::setw(12) << mesh << std::setw(14) << short_num(r.l1) << std::setw(10) << ord(r.order_l1)
        << std::setw(14) << short_num(r.l2) << std::setw(10) << ord(r.order_l2) << std::setw(14) << short_num(r.linf)
        << ord(r.order_linf) << "\n";
  }
  return exit_ok;
}

int cmd_list(std::ostream& out)
{
  for (const auto& name : case_names()) {
    const CaseSpec c = make_case(name);
    std::string mesh;
    for (const auto& m : c.meshes) {
      if (!mesh.empty()) mesh += ",";
      mesh += c.dim == Dimension::two ? std::to_string(m.nx) + "x" + std::to_string(m.ny) : std::to_string(m.nx);
    }
    out << std::left << std::setw(20) << name << std::setw(4) << (c.dim == Dimension::two ? "2D" : "1D")
        << std::setw(18) << mesh << c.description << "\n";
  }
  return exit_ok;
}

int cmd_report(const std::string& dir, std::ostream& out)
{
  const std::string summary = read_text(dir + "/summary.txt");
  std::map<std::string, std::string> kv;
  std::istringstream in(summary);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 3);
  }
  const CsvTable diag = read_csv(dir + "/diagnostics.csv");
  out << "run directory: " << dir << "\n";
  for (const char* k : {"case", "nx", "ny", "scheme", "recon", "cfl", "t", "steps", "converged"})
    if (kv.count(k)) out << "  " << std::left << std::setw(16) << k << kv[k] << "\n";
  out << "  " << std::left << std::setw(16) << "min_rho" << kv["min_rho"] << "\n";
  out << "  " << std::left << std::setw(16) << "min_p" << kv["min_p"] << "\n";
  out << "  " << std::left << std::setw(16) << "drift" << kv["relative_drift"] << "\n";
  out << "  " << std::left << std::setw(16) << "fallback_faces" << kv["fallback_faces"] << "\n";
  if (!diag.rows.empty()) {
    const std::size_t cdt = diag.column("dt"), cres = diag.column("residual");
    double dt_min = diag.rows.front()[cdt], dt_max = dt_min;
    for (const auto& r : diag.rows) {
      dt_min = std::min(dt_min, r[cdt]);
      dt_max = std::max(dt_max, r[cdt]);
    }
    out << "  " << std::left << std::setw(16) << "records" << diag.rows.size() << "\n";
    out << "  " << std::left << std::setw(16) << "dt range" << short_num(dt_min) << " .. " << short_num(dt_max)
        << "\n";
    out << "  " << std::left << std::setw(16) << "last residual" << short_num(diag.rows.back()[cres]) << "\n";
  }
  return exit_ok;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Gas-kinetic solver for the 1D/2D Euler and Navier-Stokes equations"};
  app.require_subcommand(1);
  Overrides ov;
  std::string report_dir;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config_file", ov.config, "run configuration");
    sub->add_option("--config", ov.config, "run configuration");
    sub->add_option("--out", ov.out_dir, "output directory");
    sub->add_option("--workers", ov.workers, "worker threads (default: GKS_WORKERS or 1)");
    sub->add_option("--format", ov.format, "field format: csv or vtk");
  };
  CLI::App* run = app.add_subcommand("run", "advance a case to its final time and write fields");
  add_common(run);
  CLI::App* conv = app.add_subcommand("convergence", "run every mesh of a case and report error orders");
  add_common(conv);
  CLI::App* list = app.add_subcommand("list-cases", "print the case registry");
  CLI::App* report = app.add_subcommand("report", "summarize a finished run directory");
  report->add_option("dir", report_dir, "run output directory")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "gks: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (list->parsed()) return cmd_list(out);
    if (run->parsed()) return cmd_run(ov, out);
    if (conv->parsed()) return cmd_convergence(ov, out);
    if (report->parsed()) return cmd_report(report_dir, out);
  } catch (const ConfigError& e) {
    err << "gks: configuration error: " << e.what() << "\n";
    return exit_config;
  } catch (const IoError& e) {
    err << "gks: i/o error: " << e.what() << "\n";
    return exit_io;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "gks: i/o error: " << e.what() << "\n";
    return exit_io;
  } catch (const Error& e) {
    err << "gks: numerical error: " << e.what() << "\n";
    return exit_numerical;
  }
  return exit_usage;
}

int cli_main(int argc, char** argv)
{
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return cli_main(args, std::cout, std::cerr);
}

} // namespace gks
