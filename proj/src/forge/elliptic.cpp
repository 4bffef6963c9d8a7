#include "forge/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace forge {

namespace {

constexpr double kPi = std::numbers::pi;

void check_nome(Cx s) {
  if (!(std::abs(s) < 0.95))
    throw std::invalid_argument("elliptic: nome magnitude must be < 0.95");
}

// d-th derivative of trig(a z): a^d * trig(a z + d pi/2), trig in {sin, cos}.
Cx trig_deriv(bool use_sin, double a, Cx z, int d) {
  Cx w = a * z + Cx(d * kPi / 2.0, 0.0);
  Cx base = use_sin ? std::sin(w) : std::cos(w);
  return std::pow(a, d) * base;
}

long divisor_power_sum(int p, int n) {
  long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long t = 1;
    for (int i = 0; i < p; ++i) t *= d;
    s += t;
  }
  return s;
}

Cx eisenstein_sum(Cx q, int p, double weight) {
  check_nome(q);
  Cx acc = 1.0;
  Cx qn = 1.0;
  for (int n = 1; n <= 400; ++n) {
    qn *= q;
    Cx term = weight * static_cast<double>(divisor_power_sum(p, n)) * qn;
    acc += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
  }
  return acc;
}

}  // namespace

Cx theta_nome(int j, Cx z, Cx s, int deriv) {
  check_nome(s);
  if (j < 1 || j > 4) throw std::invalid_argument("theta: j must be 1..4");
  if (deriv < 0 || deriv > 4) throw std::invalid_argument("theta: deriv must be 0..4");

  if (j == 1 || j == 2) {
    Cx acc = 0.0;
    double sign = 1.0;
    for (int n = 0; n <= 60; ++n) {
      double expo = (n + 0.5) * (n + 0.5);
      Cx coeff = 2.0 * std::pow(s, Cx(expo, 0.0));
      Cx term = coeff * trig_deriv(j == 1, 2 * n + 1, z, deriv);
      acc += (j == 1 ? sign : 1.0) * term;
      sign = -sign;
      double bound = std::abs(coeff) * std::pow(2.0 * n + 1.0, deriv) *
                     std::exp((2.0 * n + 1.0) * std::abs(z.imag()));
      if (n >= 2 && bound < 1e-18 * (1.0 + std::abs(acc))) break;
    }
    return acc;
  }

  Cx acc = (deriv == 0) ? Cx(1.0, 0.0) : Cx(0.0, 0.0);
  double sign = 1.0;
  for (int n = 1; n <= 60; ++n) {
    sign = -sign;
    double expo = static_cast<double>(n) * n;
    Cx coeff = 2.0 * std::pow(s, Cx(expo, 0.0));
    Cx term = coeff * trig_deriv(false, 2 * n, z, deriv);
    acc += (j == 4 ? sign : 1.0) * term;
    double bound = std::abs(coeff) * std::pow(2.0 * n, deriv) *
                   std::exp(2.0 * n * std::abs(z.imag()));
    if (n >= 2 && bound < 1e-18 * (1.0 + std::abs(acc))) break;
  }
  return acc;
}

Cx theta(int j, Cx z, Cx q, int deriv) { return theta_nome(j, z, std::sqrt(q), deriv); }

Cx dedekind_eta(Cx q) {
  check_nome(q);
  Cx prod = 1.0;
  Cx qn = 1.0;
  for (int n = 1; n <= 400; ++n) {
    qn *= q;
    prod *= (1.0 - qn);
    if (std::abs(qn) < 1e-18) break;
  }
  return std::pow(q, Cx(1.0 / 24.0, 0.0)) * prod;
}

Cx eisenstein_e2(Cx q) { return eisenstein_sum(q, 1, -24.0); }
Cx eisenstein_e4(Cx q) { return eisenstein_sum(q, 3, 240.0); }

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("agm: needs positive arguments");
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * (a + b); ++i) {
    double am = 0.5 * (a + b);
    double gm = std::sqrt(a * b);
    a = am;
    b = gm;
  }
  return 0.5 * (a + b);
}

namespace {

// v = pi x / (2 omega1); all theta-quotient evaluations run through here.
Cx half_angle(Cx x, const EllipticParams& ell) { return kPi * x / (2.0 * ell.omega1); }

Cx dlog_theta(int j, Cx v, Cx s) { return theta_nome(j, v, s, 1) / theta_nome(j, v, s, 0); }

// d/dv of theta_j'/theta_j and its v-derivative, for wp and wp'.
Cx dlog_theta_d1(int j, Cx v, Cx s) {
  Cx t0 = theta_nome(j, v, s, 0);
  Cx t1 = theta_nome(j, v, s, 1);
  Cx t2 = theta_nome(j, v, s, 2);
  return t2 / t0 - (t1 / t0) * (t1 / t0);
}

Cx dlog_theta_d2(int j, Cx v, Cx s) {
  Cx t0 = theta_nome(j, v, s, 0);
  Cx t1 = theta_nome(j, v, s, 1);
  Cx t2 = theta_nome(j, v, s, 2);
  Cx t3 = theta_nome(j, v, s, 3);
  Cx r1 = t1 / t0;
  return t3 / t0 - 3.0 * (t2 / t0) * r1 + 2.0 * r1 * r1 * r1;
}

Cx wp_tilde_from_theta(int j, Cx x, const EllipticParams& ell, int deriv) {
  Cx v = half_angle(x, ell);
  Cx scale = kPi / (2.0 * ell.omega1);
  switch (deriv) {
    case 0:
      return -scale * scale * dlog_theta_d1(j, v, ell.nome);
    case 1:
      return -scale * scale * scale * dlog_theta_d2(j, v, ell.nome);
    case 2: {
      // p'' = 6 p^2 - g2/2 and p = p~ - zeta1.
      Cx p = -scale * scale * dlog_theta_d1(j, v, ell.nome) - ell.zeta1;
      return 6.0 * p * p - 0.5 * ell.g2;
    }
    default:
      throw std::invalid_argument("wp_tilde: deriv must be 0..2");
  }
}

WeierstrassPoint point_from_theta(int j, Cx x, const EllipticParams& ell, int kmax) {
  WeierstrassPoint pt;
  pt.x = x;
  Cx v = half_angle(x, ell);
  Cx scale = kPi / (2.0 * ell.omega1);
  pt.zeta = scale * dlog_theta(j, v, ell.nome);
  if (kmax < 0) return pt;

  // p derivatives: p, p', then the Leibniz recursion on p'' = 6 p^2 - g2/2,
  // p^{(k+2)} = 6 sum_j C(k,j) p^{(j)} p^{(k-j)} for k >= 1.
  std::vector<Cx> p(static_cast<size_t>(kmax) + 1);
  p[0] = -scale * scale * dlog_theta_d1(j, v, ell.nome) - ell.zeta1;
  if (kmax >= 1) p[1] = -scale * scale * scale * dlog_theta_d2(j, v, ell.nome);
  if (kmax >= 2) p[2] = 6.0 * p[0] * p[0] - 0.5 * ell.g2;
  for (int k = 1; k + 2 <= kmax; ++k) {
    Cx acc = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
      acc += binom * p[i] * p[k - i];
      binom = binom * (k - i) / (i + 1.0);
    }
    p[static_cast<size_t>(k) + 2] = 6.0 * acc;
  }
  pt.p_derivs.resize(p.size());
  for (size_t i = 0; i < p.size(); ++i) pt.p_derivs[i] = (i == 0) ? p[i] + ell.zeta1 : p[i];
  return pt;
}

}  // namespace

EllipticParams EllipticParams::from_half_periods(Cx w1, Cx w2) {
  if (std::abs(w1) == 0.0) throw std::invalid_argument("EllipticParams: omega1 must be nonzero");
  Cx tau = w2 / w1;
  if (!(tau.imag() > 0.0))
    throw std::invalid_argument("EllipticParams: Im(omega2/omega1) must be positive");

  EllipticParams ell;
  ell.omega1 = w1;
  ell.omega2 = w2;
  ell.omega3 = w1 + w2;
  ell.tau = tau;
  ell.nome = std::exp(Cx(0.0, kPi) * tau);
  ell.q = ell.nome * ell.nome;
  check_nome(ell.nome);

  // zeta1 = -(pi/2 w1)^2 theta1'''(0) / (3 theta1'(0)).
  Cx scale = kPi / (2.0 * w1);
  ell.zeta1 = -scale * scale * theta_nome(1, 0.0, ell.nome, 3) /
              (3.0 * theta_nome(1, 0.0, ell.nome, 1));

  ell.e1 = wp_tilde_from_theta(1, w1, ell, 0) - ell.zeta1;
  ell.e2 = wp_tilde_from_theta(1, w2, ell, 0) - ell.zeta1;
  ell.e3 = wp_tilde_from_theta(1, ell.omega3, ell, 0) - ell.zeta1;
  ell.g2 = 2.0 * (ell.e1 * ell.e1 + ell.e2 * ell.e2 + ell.e3 * ell.e3);
  ell.g3 = 4.0 * ell.e1 * ell.e2 * ell.e3;

  Cx t2 = theta_nome(2, 0.0, ell.nome, 0);
  Cx t3 = theta_nome(3, 0.0, ell.nome, 0);
  Cx r = (t2 / t3) * (t2 / t3);
  ell.k2 = r * r;
  ell.k = std::sqrt(ell.k2);
  ell.kprime = std::sqrt(1.0 - ell.k2);
  ell.K = (kPi / 2.0) * t3 * t3;
  ell.Kprime = Cx(0.0, -1.0) * tau * ell.K;
  return ell;
}

EllipticParams EllipticParams::from_nome(Cx q, Cx w1) {
  check_nome(q);
  Cx tau = std::log(q) / Cx(0.0, 2.0 * kPi);
  return from_half_periods(w1, w1 * tau);
}

Cx zeta_tilde(Cx x, const EllipticParams& ell) {
  return (kPi / (2.0 * ell.omega1)) * dlog_theta(1, half_angle(x, ell), ell.nome);
}

Cx zeta_tilde_shift(Cx x, const EllipticParams& ell) {
  return (kPi / (2.0 * ell.omega1)) * dlog_theta(4, half_angle(x, ell), ell.nome);
}

Cx wp_tilde(Cx x, const EllipticParams& ell, int deriv) {
  return wp_tilde_from_theta(1, x, ell, deriv);
}

Cx wp_tilde_shift(Cx x, const EllipticParams& ell, int deriv) {
  return wp_tilde_from_theta(4, x, ell, deriv);
}

Cx weierstrass_p(Cx x, const EllipticParams& ell) { return wp_tilde(x, ell) - ell.zeta1; }

Cx weierstrass_p_prime(Cx x, const EllipticParams& ell) { return wp_tilde(x, ell, 1); }

Cx weierstrass_zeta(Cx x, const EllipticParams& ell) { return ell.zeta1 * x + zeta_tilde(x, ell); }

WeierstrassPoint weierstrass_point(Cx x, const EllipticParams& ell, int kmax) {
  return point_from_theta(1, x, ell, kmax);
}

WeierstrassPoint weierstrass_point_shift(Cx x, const EllipticParams& ell, int kmax) {
  return point_from_theta(4, x, ell, kmax);
}

JacobiParams JacobiParams::from_modulus(double k) {
  if (!(k > 0.0) || !(k < 1.0))
    throw std::invalid_argument("JacobiParams: modulus must satisfy 0 < k < 1");
  JacobiParams jp;
  jp.k = k;
  jp.kprime = std::sqrt(1.0 - k * k);
  jp.K = kPi / (2.0 * agm(1.0, jp.kprime));
  jp.Kprime = kPi / (2.0 * agm(1.0, jp.k));
  jp.nome = std::exp(-kPi * jp.Kprime / jp.K);
  return jp;
}

namespace {
Cx jacobi_quotient(int num, Cx z, const JacobiParams& jp, double front) {
  Cx v = kPi * z / (2.0 * jp.K);
  Cx s = jp.nome;
  return front * theta_nome(num, v, s, 0) / theta_nome(4, v, s, 0);
}
}  // namespace

Cx jacobi_sn(Cx z, const JacobiParams& jp) {
  double front = (theta_nome(3, 0.0, jp.nome, 0) / theta_nome(2, 0.0, jp.nome, 0)).real();
  return jacobi_quotient(1, z, jp, front);
}

Cx jacobi_cn(Cx z, const JacobiParams& jp) {
  double front = (theta_nome(4, 0.0, jp.nome, 0) / theta_nome(2, 0.0, jp.nome, 0)).real();
  return jacobi_quotient(2, z, jp, front);
}

Cx jacobi_dn(Cx z, const JacobiParams& jp) {
  double front = (theta_nome(4, 0.0, jp.nome, 0) / theta_nome(3, 0.0, jp.nome, 0)).real();
  return jacobi_quotient(3, z, jp, front);
}

Cx jacobi_zn(Cx z, const JacobiParams& jp) {
  Cx v = kPi * z / (2.0 * jp.K);
  return (kPi / (2.0 * jp.K)) * dlog_theta(4, v, jp.nome);
}

}  // namespace forge
