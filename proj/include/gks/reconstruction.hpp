#pragma once

#include <array>

#include "gks/gas.hpp"
#include "gks/interface_states.hpp"
#include "gks/vec4.hpp"
#include "gks/weno.hpp"

namespace gks {

enum class ReconVariables { conservative, characteristic };

/// Six cells W_{i-2..i+3} straddling the face x_{i+1/2}, in the face-local
/// frame (component 1 is the normal momentum).
using FaceStencil = std::array<Vec4, 6>;

/// Normal-direction data of one face (line averages in 2D).
struct FaceTrace
{
  Vec4 wl{};
  Vec4 wr{};
  Vec4 dwl{};
  Vec4 dwr{};
  /// Equilibrium derivative from the central four cells.
  Vec4 s1{};
  /// Set when the WENO values were replaced by the adjacent cell averages.
  bool fallback = false;
};

/// WENO5 values and slopes on both sides of the face, characteristic
/// variables taken at (W_i + W_{i+1})/2 when requested. Non-physical side
/// values fall back to the adjacent cell average with zero slope.
FaceTrace reconstruct_normal(const FaceStencil& w, double h, const GasModel& gas, ReconVariables vars);

/// Point data at one face point, before the equilibrium merge.
struct FacePoint
{
  SideState left;
  SideState right;
  Vec4 dw0_n{};
};

/// 1D face: rows are not needed, tangential slopes are zero.
FacePoint face_point_1d(const FaceTrace& t, const GasModel& gas);

/// Tangential pass: five face traces at tangential rows j-2..j+2 give point
/// values, tangential slopes (cell width ht) and normal data at the Gauss
/// points of the face.
std::array<FacePoint, 3> reconstruct_tangential(const std::array<FaceTrace, 5>& rows, double ht, const GaussLine& gauss,
                                                const GasModel& gas);

/// Rows of six normal cells for five tangential neighbours j-2..j+2.
using FaceNeighborhood = std::array<FaceStencil, 5>;

/// Both passes plus the equilibrium merge, for one 2D face.
std::array<InterfaceStates, 3> reconstruct_face_2d(const FaceNeighborhood& cells, double hn, double ht,
                                                   const GaussLine& gauss, const GasModel& gas, ReconVariables vars);

} // namespace gks
