#pragma once

#include <complex>

#include "forge/weierstrass_ring.hpp"

namespace forge {

using Cx = std::complex<double>;

// Jacobi theta functions, full-nome convention: series terms carry q^{n^2/2}
// and q^{(2n+1)^2/8} with the principal fractional power, so |q| < 1 is the
// expansion nome shared with eta and the Eisenstein series. deriv = order of
// the z-derivative, 0..4. Terms are summed until they fall below 1e-18 of the
// partial sum.
Cx theta(int j, Cx z, Cx q, int deriv = 0);

// Same series parameterized by the half nome s (terms s^{n^2}); use when the
// half nome is known directly and the branch of q^{1/2} matters.
Cx theta_nome(int j, Cx z, Cx s, int deriv = 0);

// eta(q) = q^{1/24} prod_{n>=1} (1 - q^n),
// E2(q) = 1 - 24 sum sigma_1(n) q^n,  E4(q) = 1 + 240 sum sigma_3(n) q^n.
Cx dedekind_eta(Cx q);
Cx eisenstein_e2(Cx q);
Cx eisenstein_e4(Cx q);

// Arithmetic-geometric mean; test oracle for the modulus <-> nome inversion.
double agm(double a, double b);

// Lattice data for half periods (omega1, omega2) with Im(omega2/omega1) > 0.
// e1, e2, e3 are the values of p at omega1, omega2, omega1 + omega2, in that
// order (e2 is the value at the imaginary half period). zeta1 = zeta(omega1)
// / omega1. k^2 = theta2(0)^4 / theta3(0)^4; K = (pi/2) theta3(0)^2 is the
// quarter period of the Jacobi functions with that modulus, K' = -i tau K,
// and sqrt(e1 - e2) = K / omega1. omega3 = omega1 + omega2 is recorded for
// reference and not used in any computation.
struct EllipticParams {
  Cx omega1, omega2, omega3, tau;
  Cx q;     // exp(2 pi i tau)
  Cx nome;  // exp(i pi tau), branch fixed by tau rather than sqrt(q)
  Cx e1, e2, e3, g2, g3, zeta1;
  Cx k2, k, kprime, K, Kprime;

  static EllipticParams from_half_periods(Cx w1, Cx w2);
  // w2 = w1 * tau with tau = log(q) / (2 pi i), principal log.
  static EllipticParams from_nome(Cx q, Cx w1);
};

// zeta_tilde(x) = d/dx ln theta1(pi x / 2 omega1) = zeta(x) - zeta1 x.
// zeta_tilde_shift(x) = d/dx ln theta4(pi x / 2 omega1); the half-period
// shift of theta1 carries an x-linear phase, so this equals
// zeta_tilde(x + omega2) + i pi / (2 omega1). The constant is invisible in
// any quantity fixed up to normalization; derivatives shift exactly:
// wp_tilde_shift(x, k) = wp_tilde(x + omega2, k) for every k.
Cx zeta_tilde(Cx x, const EllipticParams& ell);
Cx zeta_tilde_shift(Cx x, const EllipticParams& ell);

// wp_tilde = -d/dx zeta_tilde = p + zeta1; deriv = 0..2 directly from theta,
// higher orders via p'' = 6 p^2 - g2/2.
Cx wp_tilde(Cx x, const EllipticParams& ell, int deriv = 0);
Cx wp_tilde_shift(Cx x, const EllipticParams& ell, int deriv = 0);

Cx weierstrass_p(Cx x, const EllipticParams& ell);
Cx weierstrass_p_prime(Cx x, const EllipticParams& ell);
Cx weierstrass_zeta(Cx x, const EllipticParams& ell);

// Evaluation stack for WeierstrassElem::eval at x (or x + omega2 for the
// shifted variant, which uses the periodic zeta_tilde_shift as the zeta
// entry). p~ derivatives are filled through order kmax.
WeierstrassPoint weierstrass_point(Cx x, const EllipticParams& ell, int kmax);
WeierstrassPoint weierstrass_point_shift(Cx x, const EllipticParams& ell, int kmax);

// Jacobi elliptic functions for real modulus 0 < k < 1, via theta quotients
// at the nome exp(-pi K'/K). zn(z) = d/dz ln theta4(pi z / 2K).
struct JacobiParams {
  double k, kprime, K, Kprime, nome;
  static JacobiParams from_modulus(double k);
};
Cx jacobi_sn(Cx z, const JacobiParams& jp);
Cx jacobi_cn(Cx z, const JacobiParams& jp);
Cx jacobi_dn(Cx z, const JacobiParams& jp);
Cx jacobi_zn(Cx z, const JacobiParams& jp);

}  // namespace forge
