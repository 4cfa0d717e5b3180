#pragma once

#include "gks/gas.hpp"
#include "gks/vec4.hpp"

namespace gks {

/// Reconstructed point state on one side of a face, in the face-local frame
/// (u normal, v tangential).
struct SideState
{
  Primitive prim;
  /// Normal derivative of the conserved variables.
  Vec4 dn{};
  /// Tangential derivative of the conserved variables (zero in 1D).
  Vec4 dt{};
};

/// Everything the flux needs at one face (Gauss) point.
struct InterfaceStates
{
  SideState left;
  SideState right;
  /// Merged equilibrium state and its conserved derivatives.
  Primitive w0;
  Vec4 dw0_n{};
  Vec4 dw0_t{};
};

} // namespace gks
