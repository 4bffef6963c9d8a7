#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "forge/rational.hpp"

namespace forge {

// Coefficient matrix of -(i/2)^k d_chi^k ln theta4(chi, x1 x2) as a double
// series in x1 = q^{1/2} e^{-2 i chi}, x2 = q^{1/2} e^{2 i chi}: entries[i][j]
// multiplies x1^i x2^j. The (i/2)^k normalization turns each chi-derivative
// into the integer multiplier (i - j), so every entry is a real rational.
struct Theta4Matrix {
  int k = 0;
  int dim = 0;
  std::vector<std::vector<GaussRat>> entries;

  const GaussRat& at(int i, int j) const;
};

// Built by accumulating the product form
//   -ln theta4 = sum_{m,n >= 1} (1/m) [x1^{m(n-1)} x2^{mn}
//                + x1^{mn} x2^{m(n-1)} + (x1 x2)^{mn}].
// Off-diagonal support is exactly the set where |i-j| divides max(i,j), with
// entry (i-j)^k / |i-j|; the diagonal carries sigma_{-1}(n) at k = 0 and
// vanishes for k >= 1. k = 0 is symmetric, k >= 1 satisfies
// entries[j][i] = (-1)^k entries[i][j].
Theta4Matrix log_theta4_matrix(int k, int dim);

// Coefficients of (x1 x2)^n, 1 <= n <= N, in -ln(eta(x1 x2)/(x1 x2)^{1/24}),
// accumulated from the same product form; value sigma_{-1}(n) at index n - 1.
std::vector<mpq_class> log_eta_series(int N);

// Outcome of one identity check. When ok is false, detail names the first
// offending item; otherwise it records the measured margins.
struct CheckReport {
  bool ok = true;
  std::string detail;
};

std::string to_json(const CheckReport& r);

// Divisor content of the matrices, for all 1 <= n <= N:
//  - diagonal entry at k = 0 equals sigma_{-1}(n) from direct enumeration,
//  - row n below the diagonal is nonzero exactly at columns n - m with m | n,
//    with value 1/m, and the reciprocals sum back to the diagonal,
//  - the nonzero count equals d(n) from the prime factorization, and rows of
//    composite divisors contain their own divisors in turn,
//  - for 1 <= k <= k_max the k-matrix entry magnitude on the support is
//    m^{k-1} with sign (i-j)^k, checked at dimension min(N, 64) + 1.
CheckReport divisor_checks(int N, int k_max);

// n sigma_{-1}(n) = sigma_1(n) exactly for n <= N, and E2 = 24 q dq ln eta
// numerically at each q sample to 1e-10 (central difference; the exact
// (1/24) ln q piece is differentiated analytically). Samples must satisfy
// 0 < q <= 0.1 to keep the difference step inside that threshold.
CheckReport e2_identity_check(int N, const std::vector<double>& q_samples);

// The three a-graded lines of the large-a exponent G/eps1 against the matrix
// windows: at order a^0 the off-diagonal family of -ln theta4 (the diagonal
// family is absorbed by ln(q^{1/24}/eta)), at a^-1 and a^-2 the k = 1 and
// k = 2 matrices. Tabulated line data reaches total degree 3, so
// max_degree <= 3 and max_inv_a_power <= 2. Also validates the prefactor
// map -(m-eps1)/eps1 = -(n-1), -m(m-eps1)/(2 a eps1) = -alpha pi/(2 omega1 nu),
// -m(m-eps1)/(4 a^2) = -alpha pi^2/(4 omega1^2 nu^2) at a sample point.
CheckReport g_resummation_check(int max_degree, int max_inv_a_power);

// Gauge-side variables (a, m, eps1; eps2 is held at 0 throughout) and the
// series variables produced by the map
//   a = eps1 omega1 nu / pi,  m = n eps1,
//   x1 = q^{1/2} e^{-i pi x / omega1},  x2 = q^{1/2} e^{i pi x / omega1},
// so that x1 x2 = q and (i/4) ln(x1/x2) = pi x / (2 omega1).
struct GaugeParams {
  double a = 0.0;
  double m = 0.0;
  double eps1 = 1.0;
  std::complex<double> x1{0.0, 0.0};
  std::complex<double> x2{0.0, 0.0};

  static GaugeParams from_spectral(double nu, double n, double q, double x,
                                   double omega1, double eps1 = 1.0);
  // Max defect of the two map identities above; requires |x| < omega1 / 2 so
  // the principal log reproduces the angle.
  double map_defect(double q, double x, double omega1) const;
};

// Ratio form of the wave-function correspondence at omega1 = pi/2: for each
// sample x the refloquet exponent through nu^-3, evaluated on the shifted
// lattice point (zeta slot = d_x ln theta4), is compared with the resummed
// exponent (n-1) ln theta4 + i alpha d_x ln theta4/(2 nu)
// - alpha d_x^2 ln theta4/(4 nu^2), both normalized at x = 0. The budget is
// 1.5 (|phi_3|/nu^3 + |phi_4|/nu^4) from the first order missing on the
// resummed side; the nu^-1 and nu^-2 terms must also match pointwise at 1e-10.
// Requires 0 <= q <= 0.05, nu >= 8, and |x| <= 0.45 omega1 per sample.
CheckReport wavefunction_G_check(double nu, double alpha, double q,
                                 const std::vector<double>& x_samples);

// Eigenvalue route at omega1 = pi/2: -nu^2
// + (pi^2/omega1^2)[q dq(2 alpha ln(q^{1/24}/eta)
// - (pi^2/omega1^2) alpha^2 (q + 3q^2 + 4q^3)/(2 nu^2)) - (alpha/12)(1 - E2)]
// with q dq taken by exact series differentiation. The alpha-linear part must
// cancel to rounding; the alpha^2 part is compared with
// -nu^2 + alpha^2 (12 zeta1^2 - g2)/(48 nu^2) under the first omitted q-order
// budget, and with the dispersion series through nu^-6 under an added
// 1.5 |c4|/nu^4 allowance. Requires 0 <= q <= 0.05.
CheckReport lambda_from_F_check(double nu, double alpha, double q);

// Rows of to_string() entries joined by commas, one line per row.
std::string matrix_to_csv(const Theta4Matrix& M);

// Fixed-width aligned table of the same strings for eyeball comparison.
std::string matrix_digest(const Theta4Matrix& M);

}  // namespace forge
