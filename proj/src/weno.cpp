#include "gks/weno.hpp"

#include <cmath>

namespace gks {

namespace {

// Substencil quadratics evaluated at the right face x_{i+1/2}; values and
// derivatives (times h). Stencils: {i-2,i-1,i}, {i-1,i,i+1}, {i,i+1,i+2}.
inline void substencils(const std::array<double, 5>& w, double (&q)[3], double (&dq)[3], double (&beta)[3])
{
  const double a = w[0], b = w[1], c = w[2], d = w[3], e = w[4];
  q[0] = (2.0 * a - 7.0 * b + 11.0 * c) / 6.0;
  q[1] = (-b + 5.0 * c + 2.0 * d) / 6.0;
  q[2] = (2.0 * c + 5.0 * d - e) / 6.0;
  dq[0] = a - 3.0 * b + 2.0 * c;
  dq[1] = d - c;
  dq[2] = d - c;
  const double t0 = a - 2.0 * b + c, s0 = a - 4.0 * b + 3.0 * c;
  const double t1 = b - 2.0 * c + d, s1 = b - d;
  const double t2 = c - 2.0 * d + e, s2 = 3.0 * c - 4.0 * d + e;
  beta[0] = 13.0 / 12.0 * t0 * t0 + 0.25 * s0 * s0;
  beta[1] = 13.0 / 12.0 * t1 * t1 + 0.25 * s1 * s1;
  beta[2] = 13.0 / 12.0 * t2 * t2 + 0.25 * s2 * s2;
}

constexpr double linear_weights[3] = {0.1, 0.6, 0.3};

inline std::array<double, 3> nonlinear_weights(const double (&beta)[3])
{
  double alpha[3];
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double s = weno_epsilon + beta[k];
    alpha[k] = linear_weights[k] / (s * s);
    sum += alpha[k];
  }
  return {alpha[0] / sum, alpha[1] / sum, alpha[2] / sum};
}

} // namespace

std::array<double, 3> weno5_weights(const std::array<double, 5>& w)
{
  double q[3], dq[3], beta[3];
  substencils(w, q, dq, beta);
  return nonlinear_weights(beta);
}

ScalarFace weno5_face_scalar(const std::array<double, 5>& w, double h, FaceSide side)
{
  if (side == FaceSide::left) {
    // Mirror the stencil; the derivative changes sign under x -> -x.
    const std::array<double, 5> m{w[4], w[3], w[2], w[1], w[0]};
    ScalarFace r = weno5_face_scalar(m, h, FaceSide::right);
    r.slope = -r.slope;
    return r;
  }
  double q[3], dq[3], beta[3];
  substencils(w, q, dq, beta);
  const auto om = nonlinear_weights(beta);
  ScalarFace r;
  r.value = om[0] * q[0] + om[1] * q[1] + om[2] * q[2];
  r.slope = (om[0] * dq[0] + om[1] * dq[1] + om[2] * dq[2]) / h;
  return r;
}

FaceReconstruction weno5_face_value(const StencilWindow& s, FaceSide side)
{
  FaceReconstruction out;
  for (int k = 0; k < 4; ++k) {
    const std::array<double, 5> col{s.w[0][k], s.w[1][k], s.w[2][k], s.w[3][k], s.w[4][k]};
    const ScalarFace f = weno5_face_scalar(col, s.h, side);
    out.value[k] = f.value;
    out.slope[k] = f.slope;
  }
  return out;
}

Vec4 equilibrium_face_derivative(const std::array<Vec4, 4>& w, double h)
{
  Vec4 s;
  for (int k = 0; k < 4; ++k) {
    s[k] = (-(w[3][k] - w[0][k]) / 12.0 + 1.25 * (w[2][k] - w[1][k])) / h;
  }
  return s;
}

GaussLine GaussLine::standard()
{
  const double a = 0.5 * std::sqrt(0.6);
  return {{-a, 0.0, a}, {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0}};
}

namespace {

// sum_{l>=1} int_{-1/2}^{1/2} (p^(l))^2 for p = sum c_n xi^n, n <= 4.
double smoothness(const std::array<double, 5>& c)
{
  const double c1 = c[1], c2 = c[2], c3 = c[3], c4 = c[4];
  // Integrals of xi^k over [-1/2,1/2]: k=0 -> 1, 2 -> 1/12, 4 -> 1/80, 6 -> 1/448.
  constexpr double m2 = 1.0 / 12.0, m4 = 1.0 / 80.0, m6 = 1.0 / 448.0;
  // p'   = c1 + 2c2 xi + 3c3 xi^2 + 4c4 xi^3
  const double d1 = c1 * c1 + (4.0 * c2 * c2 + 6.0 * c1 * c3) * m2 + (9.0 * c3 * c3 + 16.0 * c2 * c4) * m4 +
                    16.0 * c4 * c4 * m6;
  // p''  = 2c2 + 6c3 xi + 12c4 xi^2
  const double d2 = 4.0 * c2 * c2 + (36.0 * c3 * c3 + 48.0 * c2 * c4) * m2 + 144.0 * c4 * c4 * m4;
  // p''' = 6c3 + 24c4 xi
  const double d3 = 36.0 * c3 * c3 + 576.0 * c4 * c4 * m2;
  // p'''' = 24c4
  const double d4 = 576.0 * c4 * c4;
  return d1 + d2 + d3 + d4;
}

constexpr double ao_gamma_hi = 0.85;
constexpr double ao_gamma_lo = 0.85;

} // namespace

WenoAoPolynomial::WenoAoPolynomial(const std::array<double, 5>& w)
{
  const double a = w[0], b = w[1], c = w[2], d = w[3], e = w[4];
  // Quadratics on {-2,-1,0}, {-1,0,1}, {0,1,2} in the center cell's frame.
  double q[3][3];
  q[0][2] = 0.5 * (a - 2.0 * b + c);
  q[0][1] = 0.5 * (a - 4.0 * b + 3.0 * c);
  q[1][2] = 0.5 * (b - 2.0 * c + d);
  q[1][1] = 0.5 * (d - b);
  q[2][2] = 0.5 * (c - 2.0 * d + e);
  q[2][1] = 0.5 * (-3.0 * c + 4.0 * d - e);
  for (auto& k : q) k[0] = c - k[2] / 12.0;

  const std::array<double, 5> quart{(9.0 * (a + e) - 116.0 * (b + d) + 2134.0 * c) / 1920.0,
                                    (5.0 * (a - e) - 34.0 * (b - d)) / 48.0,
                                    -(a + e - 12.0 * (b + d) + 22.0 * c) / 16.0,
                                    -(a - e - 2.0 * (b - d)) / 12.0,
                                    (a + e - 4.0 * (b + d) + 6.0 * c) / 24.0};

  constexpr double gl[3] = {0.5 * (1.0 - ao_gamma_hi) * (1.0 - ao_gamma_lo), (1.0 - ao_gamma_hi) * ao_gamma_lo,
                            0.5 * (1.0 - ao_gamma_hi) * (1.0 - ao_gamma_lo)};
  double alpha[4];
  {
    const double s = weno_epsilon + smoothness(quart);
    alpha[3] = ao_gamma_hi / (s * s);
  }
  for (int k = 0; k < 3; ++k) {
    const double s = weno_epsilon + q[k][1] * q[k][1] + 13.0 / 3.0 * q[k][2] * q[k][2];
    alpha[k] = gl[k] / (s * s);
  }
  const double inv = 1.0 / (alpha[0] + alpha[1] + alpha[2] + alpha[3]);
  const double r_hi = alpha[3] * inv / ao_gamma_hi;
  double wk[3];
  for (int k = 0; k < 3; ++k) wk[k] = alpha[k] * inv - r_hi * gl[k];
  for (int n = 0; n < 3; ++n) c_[n] = r_hi * quart[n] + wk[0] * q[0][n] + wk[1] * q[1][n] + wk[2] * q[2][n];
  c_[3] = r_hi * quart[3];
  c_[4] = r_hi * quart[4];
}

double WenoAoPolynomial::value(double xi) const
{
  return c_[0] + xi * (c_[1] + xi * (c_[2] + xi * (c_[3] + xi * c_[4])));
}

double WenoAoPolynomial::slope(double xi, double h) const
{
  return (c_[1] + xi * (2.0 * c_[2] + xi * (3.0 * c_[3] + xi * 4.0 * c_[4]))) / h;
}

} // namespace gks
