#include "gks/output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "gks/errors.hpp"

namespace gks {

namespace {

std::string num(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

std::string field_csv(const Field& field, const GasModel& gas)
{
  const StructuredGrid& g = field.grid();
  const bool two = g.two_d();
  std::string out = two ? "x,y,rho,u,v,p\n" : "x,rho,u,p\n";
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      const Primitive p = primitive_from_conserved(field(i, j), gas);
      out += num(g.xc(i));
      if (two) out += "," + num(g.yc(j));
      out += "," + num(p.rho) + "," + num(p.u);
      if (two) out += "," + num(p.v);
      out += "," + num(p.p) + "\n";
    }
  }
  return out;
}

std::string field_vtk(const Field& field, const GasModel& gas)
{
  const StructuredGrid& g = field.grid();
  const bool two = g.two_d();
  std::ostringstream o;
  o << "# vtk DataFile Version 3.0\n";
  o << "gks field\n";
  o << "ASCII\n";
  o << "DATASET STRUCTURED_POINTS\n";
  o << "DIMENSIONS " << g.nx + 1 << " " << (two ? g.ny + 1 : 2) << " 1\n";
  o << "ORIGIN " << num(g.x0) << " " << num(g.y0) << " 0\n";
  o << "SPACING " << num(g.dx) << " " << num(two ? g.dy : g.y1 - g.y0) << " 1\n";
  o << "CELL_DATA " << g.cells() << "\n";
  std::vector<Primitive> prims;
  prims.reserve(static_cast<std::size_t>(g.cells()));
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) prims.push_back(primitive_from_conserved(field(i, j), gas));
  auto scalar = [&](const char* name, auto get) {
    o << "SCALARS " << name << " double 1\n";
    o << "LOOKUP_TABLE default\n";
    for (const auto& p : prims) o << num(get(p)) << "\n";
  };
  scalar("rho", [](const Primitive& p) { return p.rho; });
  scalar("u", [](const Primitive& p) { return p.u; });
  if (two) scalar("v", [](const Primitive& p) { return p.v; });
  scalar("p", [](const Primitive& p) { return p.p; });
  return o.str();
}

void write_text(const std::string& path, const std::string& text)
{
  std::error_code ec;
  const std::filesystem::path fp(path);
  if (fp.has_parent_path()) std::filesystem::create_directories(fp.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("error writing '" + path + "'");
}

std::string read_text(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_field(const Field& field, const GasModel& gas, OutputFormat format, const std::string& path)
{
  write_text(path, format == OutputFormat::csv ? field_csv(field, gas) : field_vtk(field, gas));
}

std::size_t CsvTable::column(const std::string& name) const
{
  for (std::size_t k = 0; k < header.size(); ++k)
    if (header[k] == name) return k;
  throw IoError("CSV has no column '" + name + "'");
}

CsvTable parse_csv(const std::string& text)
{
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (t.header.empty()) {
      t.header = split(line);
      continue;
    }
    const auto parts = split(line);
    if (parts.size() != t.header.size())
      throw IoError("CSV line " + std::to_string(lineno) + ": expected " + std::to_string(t.header.size()) +
                    " columns");
    std::vector<double> row;
    row.reserve(parts.size());
    for (const auto& p : parts) {
      if (p.empty()) {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
        continue;
      }
      char* end = nullptr;
      const double v = std::strtod(p.c_str(), &end);
      if (end == p.c_str() || *end != '\0') throw IoError("CSV line " + std::to_string(lineno) + ": bad number");
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (t.header.empty()) throw IoError("CSV is empty");
  return t;
}

CsvTable read_csv(const std::string& path) { return parse_csv(read_text(path)); }

} // namespace gks
