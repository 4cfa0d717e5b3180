#include "gks/grid.hpp"

#include <string>

#include "gks/errors.hpp"

namespace gks {

StructuredGrid StructuredGrid::line(int nx, double x0, double x1)
{
  StructuredGrid g;
  g.dim = Dimension::one;
  g.nx = nx;
  g.ny = 1;
  g.x0 = x0;
  g.x1 = x1;
  g.y0 = 0.0;
  g.y1 = 1.0;
  g.dx = (x1 - x0) / nx;
  g.dy = 1.0;
  return g;
}

StructuredGrid StructuredGrid::plane(int nx, int ny, double x0, double x1, double y0, double y1)
{
  StructuredGrid g;
  g.dim = Dimension::two;
  g.nx = nx;
  g.ny = ny;
  g.x0 = x0;
  g.x1 = x1;
  g.y0 = y0;
  g.y1 = y1;
  g.dx = (x1 - x0) / nx;
  g.dy = (y1 - y0) / ny;
  return g;
}

void StructuredGrid::validate() const
{
  if (nx < 5) throw ConfigError("grid needs nx >= 5, got " + std::to_string(nx));
  if (two_d() && ny < 5) throw ConfigError("grid needs ny >= 5, got " + std::to_string(ny));
  if (!(dx > 0.0) || !(dy > 0.0)) throw ConfigError("grid extents must be increasing");
}

Field::Field(const StructuredGrid& grid)
    : grid_(grid), data_(static_cast<std::size_t>(grid.sx()) * static_cast<std::size_t>(grid.sy()))
{
}

namespace {

Vec4 pairwise(const std::vector<Vec4>& v, std::size_t lo, std::size_t hi)
{
  if (hi - lo == 1) return v[lo];
  if (hi - lo == 0) return {};
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise(v, lo, mid) + pairwise(v, mid, hi);
}

} // namespace

Vec4 Field::totals() const
{
  std::vector<Vec4> rows(static_cast<std::size_t>(grid_.ny));
  std::vector<Vec4> row(static_cast<std::size_t>(grid_.nx));
  for (int j = 0; j < grid_.ny; ++j) {
    for (int i = 0; i < grid_.nx; ++i) row[i] = (*this)(i, j);
    rows[j] = pairwise(row, 0, row.size());
  }
  return grid_.cell_volume() * pairwise(rows, 0, rows.size());
}

void Field::assign_interior(const Field& other)
{
  for (int j = 0; j < grid_.ny; ++j)
    for (int i = 0; i < grid_.nx; ++i) (*this)(i, j) = other(i, j);
}

} // namespace gks
