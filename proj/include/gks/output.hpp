#pragma once

#include <string>
#include <vector>

#include "gks/config.hpp"
#include "gks/gas.hpp"
#include "gks/grid.hpp"

namespace gks {

/// CSV: header x[,y],rho,u[,v],p, rows ordered by x then y, 17 significant
/// digits. VTK: legacy ASCII STRUCTURED_POINTS with one CELL_DATA scalar per
/// variable. Throws IoError.
void write_field(const Field& field, const GasModel& gas, OutputFormat format, const std::string& path);

std::string field_csv(const Field& field, const GasModel& gas);
std::string field_vtk(const Field& field, const GasModel& gas);

struct CsvTable
{
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws IoError when absent.
  std::size_t column(const std::string& name) const;
};

/// Parses a comma-separated table with one header row; empty cells read as
/// NaN. Throws IoError.
CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::string& path);

/// Writes text to a file, creating parent directories. Throws IoError.
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

} // namespace gks
