#pragma once

#include <array>

#include "gks/gas.hpp"
#include "gks/vec4.hpp"

namespace gks {

/// Highest velocity power tabulated. The second-order flux needs u^6
/// (u * u a with a carrying u^2 and the energy component carrying u^2).
inline constexpr int max_moment_order = 6;

/// Normalized velocity moments <u^n>, <v^n>, <xi^2k> of a Maxwellian,
/// with the Heaviside split of the u moments.
struct MomentTable
{
  std::array<double, max_moment_order + 1> full_u{};
  std::array<double, max_moment_order + 1> pos_u{};
  std::array<double, max_moment_order + 1> neg_u{};
  std::array<double, max_moment_order + 1> full_v{};
  std::array<double, 3> xi{};
};

/// Which part of the u axis a moment integrates over.
enum class Half { full, pos, neg };

MomentTable build_moment_table(const Primitive& prim, const GasModel& gas);

/// Coefficients of a = c1 + c2 u + c3 v + c4 (u^2 + v^2 + xi^2)/2.
struct MicroSlopes
{
  Vec4 c{};
};

/// <u^nu v^nv a psi> where psi = (1, u, v, (u^2+v^2+xi^2)/2) and moments are
/// normalized by density.
Vec4 psi_moment(const MomentTable& m, Half half, int nu, int nv, const MicroSlopes& a);

/// <u^nu v^nv psi>
Vec4 psi_moment(const MomentTable& m, Half half, int nu, int nv);

/// Inverse of the moment matrix <psi psi^T> of one Maxwellian, in closed form.
class MomentSystem
{
 public:
  /// Throws SingularMomentSystem unless lambda is positive and finite.
  MomentSystem(const Primitive& prim, const GasModel& gas);

  Vec4 solve(const Vec4& rhs) const;

 private:
  double u_ = 0.0, v_ = 0.0, lambda_ = 1.0;
  // translational plus internal degrees of freedom
  double dof_ = 2.0;
};

/// Solves rho <a psi> = dW for a.
MicroSlopes solve_microslopes(const Primitive& prim, const GasModel& gas, const Vec4& dw);
MicroSlopes solve_microslopes(const MomentSystem& system, double rho, const Vec4& dw);

/// Chapman-Enskog time slope: <(ax u + ay v + A) psi> = 0.
MicroSlopes solve_time_slope(const Primitive& prim, const GasModel& gas, const MicroSlopes& ax, const MicroSlopes& ay);
MicroSlopes solve_time_slope(const MomentSystem& system, const MomentTable& m, const MicroSlopes& ax,
                             const MicroSlopes& ay);

} // namespace gks
