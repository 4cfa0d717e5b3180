#pragma once

#include <array>
#include <span>
#include <vector>

#include "gks/gas.hpp"
#include "gks/vec4.hpp"

namespace gks {

/// Right eigenvectors of the x-direction Euler flux Jacobian at a reference
/// state, and their inverse.
class CharacteristicBasis
{
 public:
  /// Throws NonPhysicalState when the reference state has p <= 0.
  CharacteristicBasis(const Vec4& w_star, const GasModel& gas);

  /// omega = R^{-1} W
  Vec4 project(const Vec4& w) const;
  /// W = R omega
  Vec4 restore(const Vec4& omega) const;

 private:
  std::array<std::array<double, 4>, 4> right_{};
  std::array<std::array<double, 4>, 4> left_{};
};

struct CharacteristicRoundtrip
{
  std::vector<Vec4> projected;
  std::vector<Vec4> restored;
};

/// Projects every vector with the basis at w_star and restores it again.
CharacteristicRoundtrip characteristic_roundtrip(std::span<const Vec4> w_set, const Vec4& w_star, const GasModel& gas);

} // namespace gks
