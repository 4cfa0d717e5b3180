#pragma once

#include <array>

#include "gks/vec4.hpp"

namespace gks {

/// Which face of the stencil's center cell is reconstructed.
enum class FaceSide { left, right };

inline constexpr double weno_epsilon = 1e-6;

/// Five consecutive cell averages w[0..4] = W_{i-2..i+2} and the cell width.
struct StencilWindow
{
  std::array<Vec4, 5> w{};
  double h = 1.0;
};

struct FaceReconstruction
{
  Vec4 value{};
  Vec4 slope{};
};

struct ScalarFace
{
  double value = 0.0;
  double slope = 0.0;
};

/// Jiang-Shu WENO5 point value at the requested face of the center cell, and
/// the derivative of the same nonlinearly weighted polynomial there.
ScalarFace weno5_face_scalar(const std::array<double, 5>& w, double h, FaceSide side);
FaceReconstruction weno5_face_value(const StencilWindow& s, FaceSide side);

/// Nonlinear weights of the three substencils for the right face, for tests.
std::array<double, 3> weno5_weights(const std::array<double, 5>& w);

/// Fourth-order derivative at x_{i+1/2} from W_{i-1}, W_i, W_{i+1}, W_{i+2}.
Vec4 equilibrium_face_derivative(const std::array<Vec4, 4>& w, double h);

/// Three-point Gauss-Legendre rule on a face of unit (normalized) length.
struct GaussLine
{
  /// Offsets in units of the face length, relative to the face center.
  std::array<double, 3> points{};
  std::array<double, 3> weights{};

  static GaussLine standard();
};

/// Adaptive-order WENO polynomial on one cell built from five cell averages:
/// the quartic through all five, blended with the three Jiang-Shu quadratics.
/// Every candidate reproduces the center-cell average, so any blend does too.
/// Coordinates are normalized, xi = (y - y_j) / h in [-1/2, 1/2].
class WenoAoPolynomial
{
 public:
  explicit WenoAoPolynomial(const std::array<double, 5>& w);

  double value(double xi) const;
  /// d/dy at xi for cell width h.
  double slope(double xi, double h) const;

  const std::array<double, 5>& coefficients() const { return c_; }

 private:
  std::array<double, 5> c_{};
};

} // namespace gks
