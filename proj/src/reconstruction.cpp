#include "gks/reconstruction.hpp"

#include "gks/characteristic.hpp"
#include "gks/flux.hpp"

namespace gks {

namespace {

StencilWindow window(const std::array<Vec4, 6>& w, int first, double h)
{
  StencilWindow s;
  s.h = h;
  for (int k = 0; k < 5; ++k) s.w[k] = w[first + k];
  return s;
}

} // namespace

FaceTrace reconstruct_normal(const FaceStencil& w, double h, const GasModel& gas, ReconVariables vars)
{
  FaceTrace t;
  if (vars == ReconVariables::characteristic) {
    const CharacteristicBasis basis(0.5 * (w[2] + w[3]), gas);
    std::array<Vec4, 6> om;
    for (int k = 0; k < 6; ++k) om[k] = basis.project(w[k]);
    const FaceReconstruction l = weno5_face_value(window(om, 0, h), FaceSide::right);
    const FaceReconstruction r = weno5_face_value(window(om, 1, h), FaceSide::left);
    t.wl = basis.restore(l.value);
    t.dwl = basis.restore(l.slope);
    t.wr = basis.restore(r.value);
    t.dwr = basis.restore(r.slope);
  } else {
    const FaceReconstruction l = weno5_face_value(window(w, 0, h), FaceSide::right);
    const FaceReconstruction r = weno5_face_value(window(w, 1, h), FaceSide::left);
    t.wl = l.value;
    t.dwl = l.slope;
    t.wr = r.value;
    t.dwr = r.slope;
  }
  if (!is_physical(t.wl)) {
    t.wl = w[2];
    t.dwl = {};
    t.fallback = true;
  }
  if (!is_physical(t.wr)) {
    t.wr = w[3];
    t.dwr = {};
    t.fallback = true;
  }
  t.s1 = equilibrium_face_derivative({w[1], w[2], w[3], w[4]}, h);
  return t;
}

FacePoint face_point_1d(const FaceTrace& t, const GasModel& gas)
{
  FacePoint p;
  p.left.prim = primitive_from_conserved(t.wl, gas);
  p.left.dn = t.dwl;
  p.right.prim = primitive_from_conserved(t.wr, gas);
  p.right.dn = t.dwr;
  p.dw0_n = t.s1;
  return p;
}

std::array<FacePoint, 3> reconstruct_tangential(const std::array<FaceTrace, 5>& rows, double ht, const GaussLine& gauss,
                                                const GasModel& gas)
{
  std::array<FacePoint, 3> out;
  Vec4 wl[3], wr[3], tl[3], tr[3], dl[3], dr[3], s1[3];
  for (int k = 0; k < 4; ++k) {
    const WenoAoPolynomial pwl({rows[0].wl[k], rows[1].wl[k], rows[2].wl[k], rows[3].wl[k], rows[4].wl[k]});
    const WenoAoPolynomial pwr({rows[0].wr[k], rows[1].wr[k], rows[2].wr[k], rows[3].wr[k], rows[4].wr[k]});
    const WenoAoPolynomial pdl({rows[0].dwl[k], rows[1].dwl[k], rows[2].dwl[k], rows[3].dwl[k], rows[4].dwl[k]});
    const WenoAoPolynomial pdr({rows[0].dwr[k], rows[1].dwr[k], rows[2].dwr[k], rows[3].dwr[k], rows[4].dwr[k]});
    const WenoAoPolynomial ps({rows[0].s1[k], rows[1].s1[k], rows[2].s1[k], rows[3].s1[k], rows[4].s1[k]});
    for (int g = 0; g < 3; ++g) {
      const double xi = gauss.points[g];
      wl[g][k] = pwl.value(xi);
      wr[g][k] = pwr.value(xi);
      tl[g][k] = pwl.slope(xi, ht);
      tr[g][k] = pwr.slope(xi, ht);
      dl[g][k] = pdl.value(xi);
      dr[g][k] = pdr.value(xi);
      s1[g][k] = ps.value(xi);
    }
  }
  for (int g = 0; g < 3; ++g) {
    FacePoint& p = out[g];
    if (is_physical(wl[g])) {
      p.left.prim = primitive_from_conserved(wl[g], gas);
      p.left.dn = dl[g];
      p.left.dt = tl[g];
    } else {
      p.left.prim = primitive_from_conserved(rows[2].wl, gas);
      p.left.dn = rows[2].dwl;
    }
    if (is_physical(wr[g])) {
      p.right.prim = primitive_from_conserved(wr[g], gas);
      p.right.dn = dr[g];
      p.right.dt = tr[g];
    } else {
      p.right.prim = primitive_from_conserved(rows[2].wr, gas);
      p.right.dn = rows[2].dwr;
    }
    p.dw0_n = s1[g];
  }
  return out;
}

std::array<InterfaceStates, 3> reconstruct_face_2d(const FaceNeighborhood& cells, double hn, double ht,
                                                   const GaussLine& gauss, const GasModel& gas, ReconVariables vars)
{
  std::array<FaceTrace, 5> rows;
  for (int j = 0; j < 5; ++j) rows[j] = reconstruct_normal(cells[j], hn, gas, vars);
  const auto points = reconstruct_tangential(rows, ht, gauss, gas);
  std::array<InterfaceStates, 3> out;
  for (int g = 0; g < 3; ++g) {
    const EquilibriumState eq = merge_equilibrium(points[g].left, points[g].right, points[g].dw0_n, gas);
    out[g].left = points[g].left;
    out[g].right = points[g].right;
    out[g].w0 = eq.w0;
    out[g].dw0_n = eq.dw0_n;
    out[g].dw0_t = eq.dw0_t;
  }
  return out;
}

} // namespace gks
