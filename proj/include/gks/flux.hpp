#pragma once

#include "gks/gas.hpp"
#include "gks/interface_states.hpp"
#include "gks/moments.hpp"
#include "gks/vec4.hpp"

namespace gks {

enum class CollisionMode { inviscid, viscous };

struct CollisionModel
{
  CollisionMode mode = CollisionMode::inviscid;
  double eps = 0.05;
  double c_jump = 1.0;
  /// When set, the Chapman-Enskog coefficients use the physical collision
  /// time (0 inviscid, mu/p viscous) while the relaxation exponentials use the
  /// full collision time with its dissipation terms. When cleared, one tau
  /// is used everywhere.
  bool split_tau = true;

  static CollisionModel from_gas(const GasModel& gas);
};

/// eps dt + C |pl-pr|/(pl+pr) dt (inviscid) or mu/p + C |pl-pr|/(pl+pr) dt (viscous).
double collision_time(double p_left, double p_right, double dt, const GasModel& gas, const CollisionModel& model,
                      double p_interface);

/// Collision time multiplying the Chapman-Enskog terms.
double chapman_enskog_time(double tau, const GasModel& gas, const CollisionModel& model, double p_interface);

struct EquilibriumState
{
  Primitive w0;
  Vec4 dw0_n{};
  Vec4 dw0_t{};
  MicroSlopes a1;
  MicroSlopes a2;
  MicroSlopes A;
};

/// W0 = int_{u>0} psi g_l + int_{u<0} psi g_r, tangential derivative merged
/// the same way, normal derivative given. Throws NonPhysicalState.
EquilibriumState merge_equilibrium(const SideState& left, const SideState& right, const Vec4& dw0_n,
                                   const GasModel& gas);

/// Velocity-moment terms of one part of the interface distribution, each
/// multiplied by its own time weight.
struct MomentTerms
{
  Vec4 g{};
  Vec4 a{};
  Vec4 A{};
};

/// Coefficients of the time-dependent interface distribution plus the
/// velocity moments they produce.
struct FluxAssembly
{
  EquilibriumState eq;
  Primitive left;
  Primitive right;
  MicroSlopes a1_left, a2_left, A_left;
  MicroSlopes a1_right, a2_right, A_right;
  /// Collision time in the relaxation exponentials.
  double tau = 0.0;
  /// Collision time multiplying the Chapman-Enskog terms.
  double tau_ce = 0.0;

  /// u psi moments (flux) and psi moments (state) of the equilibrium and
  /// free-transport parts. The state moments are left zero unless requested.
  bool has_state = true;
  MomentTerms flux_eq, flux_free;
  MomentTerms state_eq, state_free;
};

/// Builds the interface distribution for one face point. The collision time
/// is evaluated with time step dt.
FluxAssembly assemble_flux(const SideState& left, const SideState& right, const Vec4& dw0_n, const GasModel& gas,
                           const CollisionModel& model, double dt, bool with_state = true);

/// Same, from already merged interface states and explicit collision times.
FluxAssembly assemble_flux(const InterfaceStates& s, const GasModel& gas, double tau, double tau_ce);

/// Time-integrated u psi and psi moments of the interface distribution.
struct TimeIntegratedFlux
{
  Vec4 f{};
  Vec4 w{};
};

/// Integrals over [0, delta] of the six time weights of the distribution.
struct TimeWeights
{
  double g0 = 0, a0 = 0, A0 = 0;
  double g = 0, a = 0, A = 0;
};

TimeWeights time_weights(double tau, double tau_ce, double delta);

TimeIntegratedFlux time_integrated_flux(const FluxAssembly& fa, double delta);

/// Adds (1/Pr - 1) q to the energy flux, q the time-integrated heat flux
/// relative to the interface velocity.
TimeIntegratedFlux prandtl_correction(const TimeIntegratedFlux& flux, const FluxAssembly& fa, double prandtl);

} // namespace gks
