#pragma once

#include <array>
#include <cmath>

namespace gks {

/// Four-component vector used for conserved states, fluxes and moment rows.
using Vec4 = std::array<double, 4>;

inline constexpr Vec4 operator+(const Vec4& a, const Vec4& b)
{
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline constexpr Vec4 operator-(const Vec4& a, const Vec4& b)
{
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline constexpr Vec4 operator-(const Vec4& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

inline constexpr Vec4 operator*(double s, const Vec4& a)
{
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

inline constexpr Vec4 operator*(const Vec4& a, double s) { return s * a; }

inline constexpr Vec4& operator+=(Vec4& a, const Vec4& b)
{
  for (int k = 0; k < 4; ++k) a[k] += b[k];
  return a;
}

inline constexpr Vec4& operator-=(Vec4& a, const Vec4& b)
{
  for (int k = 0; k < 4; ++k) a[k] -= b[k];
  return a;
}

inline constexpr Vec4& operator*=(Vec4& a, double s)
{
  for (int k = 0; k < 4; ++k) a[k] *= s;
  return a;
}

inline double max_abs(const Vec4& a)
{
  return std::max(std::max(std::abs(a[0]), std::abs(a[1])), std::max(std::abs(a[2]), std::abs(a[3])));
}

} // namespace gks
