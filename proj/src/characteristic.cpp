#include "gks/characteristic.hpp"

#include <cmath>

#include "gks/errors.hpp"

namespace gks {

CharacteristicBasis::CharacteristicBasis(const Vec4& w_star, const GasModel& gas)
{
  const Primitive s = primitive_from_conserved(w_star, gas);
  const double u = s.u, v = s.v;
  const double c = std::sqrt(gas.gamma * s.p / s.rho);
  const double q2 = u * u + v * v;
  const double H = gas.gamma / (gas.gamma - 1.0) * s.p / s.rho + 0.5 * q2;

  // columns: u-c, entropy, shear, u+c
  right_ = {{{1.0, 1.0, 0.0, 1.0},
             {u - c, u, 0.0, u + c},
             {v, v, 1.0, v},
             {H - u * c, 0.5 * q2, v, H + u * c}}};

  const double b1 = (gas.gamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * q2;
  left_ = {{{0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1},
            {1.0 - b2, b1 * u, b1 * v, -b1},
            {-v, 0.0, 1.0, 0.0},
            {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1}}};
}

Vec4 CharacteristicBasis::project(const Vec4& w) const
{
  Vec4 r{};
  for (int a = 0; a < 4; ++a)
    r[a] = left_[a][0] * w[0] + left_[a][1] * w[1] + left_[a][2] * w[2] + left_[a][3] * w[3];
  return r;
}

Vec4 CharacteristicBasis::restore(const Vec4& omega) const
{
  Vec4 r{};
  for (int a = 0; a < 4; ++a)
    r[a] = right_[a][0] * omega[0] + right_[a][1] * omega[1] + right_[a][2] * omega[2] + right_[a][3] * omega[3];
  return r;
}

CharacteristicRoundtrip characteristic_roundtrip(std::span<const Vec4> w_set, const Vec4& w_star, const GasModel& gas)
{
  const CharacteristicBasis basis(w_star, gas);
  CharacteristicRoundtrip out;
  out.projected.reserve(w_set.size());
  out.restored.reserve(w_set.size());
  for (const Vec4& w : w_set) {
    out.projected.push_back(basis.project(w));
    out.restored.push_back(basis.restore(out.projected.back()));
  }
  return out;
}

} // namespace gks
