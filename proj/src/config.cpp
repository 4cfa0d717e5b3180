#include "gks/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gks/errors.hpp"

namespace gks {

namespace {

std::string trim(const std::string& s)
{
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

struct Line
{
  int number;
  std::string key;
  std::string value;
};

[[noreturn]] void bad(const Line& l, const std::string& what)
{
  throw ConfigError("line " + std::to_string(l.number) + ": " + what);
}

double to_double(const Line& l)
{
  const std::string& s = l.value;
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(v))
    bad(l, "'" + l.key + "' expects a number, got '" + s + "'");
  return v;
}

long to_long(const Line& l)
{
  const std::string& s = l.value;
  long v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) bad(l, "'" + l.key + "' expects an integer, got '" + s + "'");
  return v;
}

int to_int(const Line& l) { return static_cast<int>(to_long(l)); }

double positive(const Line& l)
{
  const double v = to_double(l);
  if (!(v > 0.0)) bad(l, "'" + l.key + "' must be positive");
  return v;
}

bool to_bool(const Line& l)
{
  if (l.value == "true" || l.value == "yes" || l.value == "1") return true;
  if (l.value == "false" || l.value == "no" || l.value == "0") return false;
  bad(l, "'" + l.key + "' expects true or false, got '" + l.value + "'");
}

std::vector<Mesh> to_meshes(const Line& l)
{
  std::vector<Mesh> out;
  std::stringstream ss(l.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    Mesh m;
    const auto x = item.find('x');
    Line part = l;
    part.value = x == std::string::npos ? item : item.substr(0, x);
    m.nx = to_int(part);
    if (x != std::string::npos) {
      part.value = item.substr(x + 1);
      m.ny = to_int(part);
    } else {
      m.ny = 0;
    }
    if (m.nx <= 0 || m.ny < 0) bad(l, "mesh sizes must be positive");
    out.push_back(m);
  }
  if (out.empty()) bad(l, "empty mesh list");
  return out;
}

using Setter = std::function<void(RunConfig&, const Line&)>;

struct KeyInfo
{
  const char* section;
  Setter set;
};

const std::map<std::string, KeyInfo>& keys()
{
  static const std::map<std::string, KeyInfo> table = {
      {"case", {"case", [](RunConfig& c, const Line& l) { c.case_name = l.value; }}},
      {"t_final", {"case", [](RunConfig& c, const Line& l) { c.t_final = positive(l); }}},
      {"cfl", {"case", [](RunConfig& c, const Line& l) { c.cfl = positive(l); }}},
      {"recon",
       {"case",
        [](RunConfig& c, const Line& l) {
          if (l.value == "conservative") c.recon = ReconVariables::conservative;
          else if (l.value == "characteristic") c.recon = ReconVariables::characteristic;
          else bad(l, "recon must be conservative or characteristic");
        }}},
      {"scheme",
       {"case",
        [](RunConfig& c, const Line& l) {
          if (l.value == "two_stage") c.scheme = TimeScheme::two_stage;
          else if (l.value == "single_window") c.scheme = TimeScheme::single_window;
          else bad(l, "scheme must be two_stage or single_window");
        }}},
      {"norm",
       {"case",
        [](RunConfig& c, const Line& l) {
          if (l.value == "volume_averaged") c.norm_scale = NormScale::volume_averaged;
          else if (l.value == "integrated") c.norm_scale = NormScale::integrated;
          else bad(l, "norm must be volume_averaged or integrated");
        }}},
      {"nx", {"mesh", [](RunConfig& c, const Line& l) { c.nx = to_int(l); }}},
      {"ny", {"mesh", [](RunConfig& c, const Line& l) { c.ny = to_int(l); }}},
      {"meshes", {"mesh", [](RunConfig& c, const Line& l) { c.meshes = to_meshes(l); }}},
      {"gamma",
       {"gas",
        [](RunConfig& c, const Line& l) {
          const double g = to_double(l);
          if (!(g > 1.0)) bad(l, "gamma must exceed 1");
          c.gamma = g;
        }}},
      {"mu",
       {"gas",
        [](RunConfig& c, const Line& l) {
          const double v = to_double(l);
          if (v < 0.0) bad(l, "mu must be non-negative");
          c.mu = v;
        }}},
      {"prandtl", {"gas", [](RunConfig& c, const Line& l) { c.prandtl = positive(l); }}},
      {"tau_eps",
       {"gas",
        [](RunConfig& c, const Line& l) {
          const double v = to_double(l);
          if (v < 0.0) bad(l, "tau_eps must be non-negative");
          c.tau_eps = v;
        }}},
      {"tau_c",
       {"gas",
        [](RunConfig& c, const Line& l) {
          const double v = to_double(l);
          if (v < 0.0) bad(l, "tau_c must be non-negative");
          c.tau_c = v;
        }}},
      {"split_tau", {"gas", [](RunConfig& c, const Line& l) { c.split_tau = to_bool(l); }}},
      {"dir", {"output", [](RunConfig& c, const Line& l) { c.out_dir = l.value; }}},
      {"format",
       {"output",
        [](RunConfig& c, const Line& l) {
          if (l.value == "csv") c.format = OutputFormat::csv;
          else if (l.value == "vtk") c.format = OutputFormat::vtk;
          else bad(l, "format must be csv or vtk");
        }}},
      {"every", {"output", [](RunConfig& c, const Line& l) { c.output_every = to_int(l); }}},
      {"diag_every", {"output", [](RunConfig& c, const Line& l) { c.diag_every = to_int(l); }}},
      {"checkpoint", {"output", [](RunConfig& c, const Line& l) { c.checkpoint = l.value; }}},
      {"workers",
       {"run",
        [](RunConfig& c, const Line& l) {
          const int w = to_int(l);
          if (w < 1) bad(l, "workers must be at least 1");
          c.workers = w;
        }}},
      {"max_steps", {"run", [](RunConfig& c, const Line& l) { c.max_steps = to_long(l); }}},
      {"steady_tol", {"run", [](RunConfig& c, const Line& l) { c.steady_tol = positive(l); }}},
      {"dt", {"run", [](RunConfig& c, const Line& l) { c.fixed_dt = positive(l); }}},
      {"viscous_bound", {"run", [](RunConfig& c, const Line& l) { c.viscous_bound = to_bool(l); }}},
      {"restart", {"run", [](RunConfig& c, const Line& l) { c.restart = l.value; }}},
      {"reference_table", {"run", [](RunConfig& c, const Line& l) { c.reference_table = l.value; }}},
  };
  return table;
}

} // namespace

RunConfig parse_config(const std::string& text)
{
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    Line l{number, "", ""};
    if (s.front() == '[') {
      if (s.back() != ']') bad(l, "malformed section header '" + s + "'");
      section = trim(s.substr(1, s.size() - 2));
      static const char* known[] = {"case", "mesh", "gas", "output", "run"};
      bool ok = false;
      for (const char* k : known) ok = ok || section == k;
      if (!ok) bad(l, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) bad(l, "expected key = value, got '" + s + "'");
    l.key = trim(s.substr(0, eq));
    l.value = trim(s.substr(eq + 1));
    if (l.key.empty()) bad(l, "missing key");
    if (l.value.empty()) bad(l, "missing value for '" + l.key + "'");
    const auto it = keys().find(l.key);
    if (it == keys().end()) bad(l, "unknown key '" + l.key + "'");
    if (!section.empty() && section != it->second.section)
      bad(l, "key '" + l.key + "' belongs in [" + it->second.section + "], not [" + section + "]");
    it->second.set(cfg, l);
  }
  return cfg;
}

RunConfig load_config(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

CaseSpec build_case(const RunConfig& cfg)
{
  if (cfg.case_name.empty()) throw ConfigError("config does not name a case");
  CaseSpec spec = make_case(cfg.case_name);
  if (cfg.gamma) {
    GasModel g = GasModel::ideal(*cfg.gamma, spec.dim);
    g.mu = spec.gas.mu;
    g.prandtl = spec.gas.prandtl;
    g.tau_eps = spec.gas.tau_eps;
    g.tau_c = spec.gas.tau_c;
    spec.gas = g;
  }
  if (cfg.mu) {
    if (*cfg.mu > 0.0) spec.gas.mu = *cfg.mu;
    else spec.gas.mu.reset();
  }
  if (cfg.prandtl) spec.gas.prandtl = *cfg.prandtl;
  if (cfg.tau_eps) spec.gas.tau_eps = *cfg.tau_eps;
  if (cfg.tau_c) spec.gas.tau_c = *cfg.tau_c;
  if (cfg.cfl) spec.cfl = *cfg.cfl;
  if (cfg.t_final) spec.t_final = *cfg.t_final;
  if (cfg.recon) spec.recon = *cfg.recon;
  if (cfg.norm_scale) spec.norm_scale = *cfg.norm_scale;
  if (cfg.steady_tol) spec.steady_tol = *cfg.steady_tol;
  const bool two = spec.dim == Dimension::two;
  if (!cfg.meshes.empty()) {
    spec.meshes.clear();
    for (Mesh m : cfg.meshes) {
      if (!two) m.ny = 1;
      else if (m.ny == 0) m.ny = m.nx;
      spec.meshes.push_back(m);
    }
  }
  if (cfg.nx || cfg.ny) {
    Mesh m = spec.meshes.front();
    if (cfg.nx) m.nx = *cfg.nx;
    if (cfg.ny) {
      if (!two) throw ConfigError("ny given for a 1D case");
      m.ny = *cfg.ny;
    } else if (two && cfg.nx) {
      // Keep the aspect of the default mesh.
      const Mesh d = spec.meshes.front();
      m.ny = std::max(1, static_cast<int>(std::lround(static_cast<double>(*cfg.nx) * d.ny / d.nx)));
    }
    spec.meshes = {m};
  }
  spec.validate();
  return spec;
}

SolverOptions build_options(const RunConfig& cfg, const CaseSpec& spec)
{
  SolverOptions o = SolverOptions::for_case(spec);
  o.scheme = cfg.scheme;
  o.workers = resolve_workers(cfg.workers);
  o.diag_every = cfg.diag_every;
  o.max_steps = cfg.max_steps;
  o.fixed_dt = cfg.fixed_dt;
  o.viscous_bound = cfg.viscous_bound;
  if (cfg.split_tau) o.collision.split_tau = *cfg.split_tau;
  return o;
}

int resolve_workers(int configured)
{
  if (configured > 0) return configured;
  if (const char* env = std::getenv("GKS_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

std::string to_string(ReconVariables v) { return v == ReconVariables::conservative ? "conservative" : "characteristic"; }
std::string to_string(TimeScheme s) { return s == TimeScheme::two_stage ? "two_stage" : "single_window"; }
std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "vtk"; }
std::string to_string(NormScale s) { return s == NormScale::integrated ? "integrated" : "volume_averaged"; }

} // namespace gks
