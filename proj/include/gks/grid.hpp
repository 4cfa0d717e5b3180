#pragma once

#include <vector>

#include "gks/gas.hpp"
#include "gks/vec4.hpp"

namespace gks {

/// Uniform Cartesian grid with a ghost layer of fixed depth. In 1D the y
/// extent is a single cell without ghosts.
struct StructuredGrid
{
  static constexpr int ghost = 3;

  Dimension dim = Dimension::one;
  int nx = 0;
  int ny = 1;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  double dx = 1.0;
  double dy = 1.0;

  static StructuredGrid line(int nx, double x0, double x1);
  static StructuredGrid plane(int nx, int ny, double x0, double x1, double y0, double y1);

  /// Solver requirements (nx, ny >= 5, positive extents); the factories do
  /// not check them. Throws ConfigError.
  void validate() const;

  bool two_d() const { return dim == Dimension::two; }
  int gy() const { return two_d() ? ghost : 0; }
  int sx() const { return nx + 2 * ghost; }
  int sy() const { return ny + 2 * gy(); }
  double xc(int i) const { return x0 + (i + 0.5) * dx; }
  double yc(int j) const { return two_d() ? y0 + (j + 0.5) * dy : 0.5 * (y0 + y1); }
  double cell_volume() const { return two_d() ? dx * dy : dx; }
  double domain_volume() const { return two_d() ? (x1 - x0) * (y1 - y0) : (x1 - x0); }
  long long cells() const { return static_cast<long long>(nx) * ny; }
};

/// Conserved variables on a grid including ghosts; i in [-g, nx+g), j in
/// [-g, ny+g) (j = 0 only in 1D).
class Field
{
 public:
  Field() = default;
  explicit Field(const StructuredGrid& grid);

  const StructuredGrid& grid() const { return grid_; }

  Vec4& operator()(int i, int j = 0) { return data_[index(i, j)]; }
  const Vec4& operator()(int i, int j = 0) const { return data_[index(i, j)]; }

  std::vector<Vec4>& raw() { return data_; }
  const std::vector<Vec4>& raw() const { return data_; }

  /// Volume-weighted sums of each conserved variable over interior cells,
  /// accumulated by rows then pairwise.
  Vec4 totals() const;

  /// Copies interior cells only.
  void assign_interior(const Field& other);

 private:
  std::size_t index(int i, int j) const
  {
    return static_cast<std::size_t>(j + grid_.gy()) * static_cast<std::size_t>(grid_.sx()) +
           static_cast<std::size_t>(i + StructuredGrid::ghost);
  }

  StructuredGrid grid_;
  std::vector<Vec4> data_;
};

} // namespace gks
