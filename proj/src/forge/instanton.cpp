#include "forge/instanton.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "forge/dispersion.hpp"
#include "forge/elliptic.hpp"
#include "forge/weierstrass_ring.hpp"

namespace forge {

namespace {

using Cx = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;

mpq_class pow_int(long base, int k) {
  mpz_class r(1), b(base);
  for (int i = 0; i < k; ++i) r *= b;
  return mpq_class(r);
}

std::vector<int> divisors_of(int n) {
  std::vector<int> d;
  for (int i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    d.push_back(i);
    if (i != n / i) d.push_back(n / i);
  }
  std::sort(d.begin(), d.end());
  return d;
}

mpq_class sigma_minus_one(int n) {
  mpq_class s = 0;
  for (int d : divisors_of(n)) s += rat(1, d);
  return s;
}

long sigma_one(int n) {
  long s = 0;
  for (int d : divisors_of(n)) s += d;
  return s;
}

int divisor_count_from_factorization(int n) {
  int count = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

std::string pos(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

ParamBindings lattice_bindings(double alpha, const EllipticParams& ell) {
  ParamBindings b;
  b[Param::alpha] = alpha;
  b[Param::zeta1] = ell.zeta1;
  b[Param::g2] = ell.g2;
  b[Param::g3] = ell.g3;
  return b;
}

TruncatedSeries<ParamPoly> lame_dispersion() {
  return dispersion_from_periods(
      large_energy_chain(WeierstrassElem::p_term(ParamPoly::param(Param::alpha)), 8));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

const GaussRat& Theta4Matrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim || j >= dim)
    throw std::out_of_range("Theta4Matrix: index outside dim");
  return entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

Theta4Matrix log_theta4_matrix(int k, int dim) {
  if (dim < 1 || k < 0)
    throw std::invalid_argument("log_theta4_matrix: need dim >= 1 and k >= 0");
  Theta4Matrix M;
  M.k = k;
  M.dim = dim;
  M.entries.assign(static_cast<size_t>(dim),
                   std::vector<GaussRat>(static_cast<size_t>(dim), GaussRat(0)));
  for (int m = 1; m < dim; ++m) {
    for (int n = 1; m * n < dim; ++n) {
      size_t lo = static_cast<size_t>(m * (n - 1)), hi = static_cast<size_t>(m * n);
      M.entries[lo][hi] = M.entries[lo][hi] + GaussRat(pow_int(-m, k) / m);
      M.entries[hi][lo] = M.entries[hi][lo] + GaussRat(pow_int(m, k) / m);
      if (k == 0) M.entries[hi][hi] = M.entries[hi][hi] + GaussRat(rat(1, m));
    }
  }
  return M;
}

std::vector<mpq_class> log_eta_series(int N) {
  if (N < 1) throw std::invalid_argument("log_eta_series: need N >= 1");
  std::vector<mpq_class> s(static_cast<size_t>(N), mpq_class(0));
  for (int m = 1; m <= N; ++m)
    for (int j = m; j <= N; j += m) s[static_cast<size_t>(j - 1)] += rat(1, m);
  return s;
}

std::string to_json(const CheckReport& r) {
  nlohmann::json j;
  j["detail"] = r.detail;
  j["ok"] = r.ok;
  return j.dump();
}

CheckReport divisor_checks(int N, int k_max) {
  if (N < 2) throw std::invalid_argument("divisor_checks: need N >= 2");
  if (k_max < 1) throw std::invalid_argument("divisor_checks: need k_max >= 1");
  CheckReport rep;
  auto fail = [&rep](const std::string& s) {
    if (rep.ok) {
      rep.ok = false;
      rep.detail = s;
    }
  };

  Theta4Matrix A0 = log_theta4_matrix(0, N + 1);
  for (int n = 1; n <= N && rep.ok; ++n) {
    GaussRat diag(sigma_minus_one(n));
    if (A0.at(n, n) != diag) {
      fail("diagonal entry at n = " + std::to_string(n) + " is not sigma_{-1}(n)");
      break;
    }
    mpq_class reciprocal_sum = 0;
    int nonzero = 0;
    for (int j = 0; j < n; ++j) {
      int m = n - j;
      const GaussRat& e = A0.at(n, j);
      if (n % m != 0) {
        if (!e.is_zero()) fail("entry off the divisor support at " + pos(n, j));
        continue;
      }
      if (e != GaussRat(rat(1, m)))
        fail("entry at " + pos(n, j) + " is " + e.to_string() + ", wanted 1/" +
             std::to_string(m));
      reciprocal_sum += rat(1, m);
      ++nonzero;
    }
    if (reciprocal_sum != diag.re)
      fail("reciprocal sum differs from the diagonal at n = " + std::to_string(n));
    auto divs = divisors_of(n);
    if (nonzero != static_cast<int>(divs.size()))
      fail("nonzero count in row " + std::to_string(n) + " is not d(n)");
    if (nonzero != divisor_count_from_factorization(n))
      fail("d(n) disagrees with the factorization product at n = " + std::to_string(n));
    // Composite divisors repeat the pattern: row d holds entries at d - e
    // for every e | d.
    for (int d : divs)
      if (d > 1)
        for (int e : divisors_of(d))
          if (A0.at(d, d - e).is_zero())
            fail("divisor recursion broken at row " + std::to_string(d) + ", divisor " +
                 std::to_string(e));
  }

  int kd = std::min(N, 64) + 1;
  for (int k = 1; k <= k_max && rep.ok; ++k) {
    Theta4Matrix Ak = log_theta4_matrix(k, kd);
    for (int i = 0; i < kd && rep.ok; ++i) {
      for (int j = 0; j < kd; ++j) {
        const GaussRat& e = Ak.at(i, j);
        if (i == j) {
          if (!e.is_zero()) fail("k = " + std::to_string(k) + " diagonal nonzero at n = " +
                                 std::to_string(i));
          continue;
        }
        int m = std::abs(i - j);
        if (std::max(i, j) % m != 0) {
          if (!e.is_zero())
            fail("k = " + std::to_string(k) + " entry off the support at " + pos(i, j));
          continue;
        }
        mpq_class magnitude = pow_int(m, k - 1);
        mpq_class want = (i > j || k % 2 == 0) ? magnitude : -magnitude;
        if (e != GaussRat(want))
          fail("k = " + std::to_string(k) + " entry at " + pos(i, j) + " is " +
               e.to_string() + ", wanted magnitude m^{k-1} with sign (i-j)^k");
      }
    }
  }
  if (rep.ok)
    rep.detail = "rows 1.." + std::to_string(N) + " carry the divisor data; k = 1.." +
                 std::to_string(k_max) + " magnitudes follow m^{k-1} at dim " +
                 std::to_string(kd);
  return rep;
}

CheckReport e2_identity_check(int N, const std::vector<double>& q_samples) {
  if (N < 2) throw std::invalid_argument("e2_identity_check: need N >= 2");
  CheckReport rep;
  auto fail = [&rep](const std::string& s) {
    if (rep.ok) {
      rep.ok = false;
      rep.detail = s;
    }
  };

  auto eta = log_eta_series(N);
  for (int n = 1; n <= N; ++n)
    if (mpq_class(n) * eta[static_cast<size_t>(n - 1)] != mpq_class(sigma_one(n))) {
      fail("n sigma_{-1}(n) != sigma_1(n) at n = " + std::to_string(n));
      break;
    }

  // E2 = 24 q dq ln eta; the exact (1/24) ln q piece contributes the constant
  // 1, the smooth remainder ln(eta q^{-1/24}) is differentiated centrally.
  double max_defect = 0.0;
  for (double q : q_samples) {
    if (!(q > 0.0) || !(q <= 0.1))
      throw std::invalid_argument("e2_identity_check: samples must satisfy 0 < q <= 0.1");
    double h = 1e-4 * q;
    auto g = [](double t) {
      return std::log(dedekind_eta(Cx(t, 0.0)).real()) - std::log(t) / 24.0;
    };
    double fd = 1.0 + 24.0 * q * (g(q + h) - g(q - h)) / (2.0 * h);
    double defect = std::abs(fd - eisenstein_e2(Cx(q, 0.0)).real());
    max_defect = std::max(max_defect, defect);
    if (defect > 1e-10)
      fail("E2 defect " + fmt(defect) + " at q = " + fmt(q));
  }
  if (rep.ok)
    rep.detail = "n sigma_{-1}(n) = sigma_1(n) for n <= " + std::to_string(N) +
                 "; max E2 defect " + fmt(max_defect);
  return rep;
}

GaugeParams GaugeParams::from_spectral(double nu, double n, double q, double x, double omega1,
                                       double eps1) {
  if (!(q >= 0.0) || !(omega1 > 0.0) || eps1 == 0.0)
    throw std::invalid_argument("GaugeParams: need q >= 0, omega1 > 0, eps1 != 0");
  GaugeParams g;
  g.eps1 = eps1;
  g.a = eps1 * omega1 * nu / kPi;
  g.m = n * eps1;
  double r = std::sqrt(q);
  g.x1 = r * std::exp(Cx(0.0, -kPi * x / omega1));
  g.x2 = r * std::exp(Cx(0.0, kPi * x / omega1));
  return g;
}

double GaugeParams::map_defect(double q, double x, double omega1) const {
  double d1 = std::abs(x1 * x2 - Cx(q, 0.0));
  // Principal log needs |x| < omega1 / 2 so the angle of x1/x2 stays in
  // (-pi, pi).
  Cx chi = Cx(0.0, 0.25) * std::log(x1 / x2);
  double d2 = std::abs(chi - Cx(kPi * x / (2.0 * omega1), 0.0));
  return std::max(d1, d2);
}

CheckReport g_resummation_check(int max_degree, int max_inv_a_power) {
  if (max_degree < 1 || max_degree > 3 || max_inv_a_power < 0 || max_inv_a_power > 2)
    throw std::invalid_argument(
        "g_resummation_check: tabulated window covers degree <= 3 and a-power <= 2");
  CheckReport rep;
  auto fail = [&rep](const std::string& s) {
    if (rep.ok) {
      rep.ok = false;
      rep.detail = s;
    }
  };

  // The three a-graded exponent lines through total degree 3, keyed by
  // (x1 power, x2 power). Prefactors: -(m-eps1)/eps1, -m(m-eps1)/(2 a eps1),
  // -m(m-eps1)/(4 a^2).
  using Key = std::pair<int, int>;
  const std::map<Key, mpq_class> lines[3] = {
      {{{1, 0}, 1},
       {{0, 1}, 1},
       {{2, 0}, rat(1, 2)},
       {{0, 2}, rat(1, 2)},
       {{3, 0}, rat(1, 3)},
       {{2, 1}, 1},
       {{1, 2}, 1},
       {{0, 3}, rat(1, 3)}},
      {{{1, 0}, 1},
       {{0, 1}, -1},
       {{2, 0}, 1},
       {{0, 2}, -1},
       {{3, 0}, 1},
       {{2, 1}, 1},
       {{1, 2}, -1},
       {{0, 3}, -1}},
      {{{1, 0}, 1},
       {{0, 1}, 1},
       {{2, 0}, 2},
       {{0, 2}, 2},
       {{3, 0}, 3},
       {{2, 1}, 1},
       {{1, 2}, 1},
       {{0, 3}, 3}},
  };
  for (const auto& line : lines)
    for (const auto& [key, value] : line)
      if (key.first == key.second)
        fail("tabulated line holds a pure diagonal monomial at degree " +
             std::to_string(key.first));

  for (int p = 0; p <= max_inv_a_power && rep.ok; ++p) {
    Theta4Matrix A = log_theta4_matrix(p, max_degree + 1);
    for (int i = 0; i <= max_degree; ++i) {
      for (int j = 0; i + j <= max_degree; ++j) {
        if (i == 0 && j == 0) continue;
        mpq_class want = 0;
        auto it = lines[p].find({i, j});
        if (it != lines[p].end()) want = it->second;
        // At a^0 the diagonal family joins ln(q^{1/24}/eta) instead of the
        // printed line, so only the off-diagonal part of the matrix counts.
        GaussRat got = (p == 0 && i == j) ? GaussRat(0) : A.at(i, j);
        if (got != GaussRat(want))
          fail("monomial x1^" + std::to_string(i) + " x2^" + std::to_string(j) +
               " at a^-" + std::to_string(p) + ": line has " + GaussRat(want).to_string() +
               ", matrix gives " + got.to_string());
      }
    }
  }

  // The dropped diagonal family is exactly the eta series, order by order.
  {
    Theta4Matrix A0 = log_theta4_matrix(0, 7);
    auto eta = log_eta_series(6);
    for (int n = 1; n <= 6; ++n)
      if (A0.at(n, n) != GaussRat(eta[static_cast<size_t>(n - 1)]))
        fail("diagonal family differs from the eta series at n = " + std::to_string(n));
  }

  // Prefactor map at a sample point; eps1 must drop out of every line.
  {
    double nu = 10.0, n = 3.0, q = 0.02, w1 = kPi / 2.0, eps1 = 0.7, x = 0.3 * w1;
    double alpha = n * (n - 1.0);
    GaugeParams gp = GaugeParams::from_spectral(nu, n, q, x, w1, eps1);
    double line0 = -(gp.m - gp.eps1) / gp.eps1;
    double line1 = -gp.m * (gp.m - gp.eps1) / (2.0 * gp.a * gp.eps1);
    double line2 = -gp.m * (gp.m - gp.eps1) / (4.0 * gp.a * gp.a);
    double want0 = -(n - 1.0);
    double want1 = -alpha * kPi / (2.0 * w1 * nu);
    double want2 = -alpha * kPi * kPi / (4.0 * w1 * w1 * nu * nu);
    if (std::abs(line0 - want0) > 1e-13 * (1.0 + std::abs(want0)))
      fail("a^0 prefactor map defect");
    if (std::abs(line1 - want1) > 1e-13 * (1.0 + std::abs(want1)))
      fail("a^-1 prefactor map defect");
    if (std::abs(line2 - want2) > 1e-13 * (1.0 + std::abs(want2)))
      fail("a^-2 prefactor map defect");
    if (gp.map_defect(q, x, w1) > 1e-13) fail("x1, x2 map defect");
  }

  if (rep.ok)
    rep.detail = "lines a^0..a^-" + std::to_string(max_inv_a_power) +
                 " match the matrices through degree " + std::to_string(max_degree) +
                 "; diagonal family equals the eta series; prefactor map holds";
  return rep;
}

CheckReport wavefunction_G_check(double nu, double alpha, double q,
                                 const std::vector<double>& x_samples) {
  if (!(q >= 0.0) || q > 0.05)
    throw std::invalid_argument("wavefunction_G_check: validated window is 0 <= q <= 0.05");
  if (!(nu >= 8.0)) throw std::invalid_argument("wavefunction_G_check: need nu >= 8");
  if (x_samples.empty())
    throw std::invalid_argument("wavefunction_G_check: need at least one x sample");
  const double w1 = kPi / 2.0;
  for (double x : x_samples)
    if (std::abs(x) > 0.45 * w1)
      throw std::invalid_argument("wavefunction_G_check: samples must satisfy |x| <= 0.45 omega1");

  CheckReport rep;
  if (q == 0.0) {
    rep.detail = "q = 0: empty series, both sides equal 1";
    return rep;
  }

  double n = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * alpha));
  EllipticParams ell = EllipticParams::from_nome(Cx(q, 0.0), Cx(w1, 0.0));
  auto chain = large_energy_chain(WeierstrassElem::p_term(ParamPoly::param(Param::alpha)), 8);
  auto phi = refloquet_wavefunction(wavefunction_exponent(chain, false),
                                    sqrt_lambda_of_nu(floquet_exponent_series(chain)));
  ParamBindings b = lattice_bindings(alpha, ell);

  int kmax = 0;
  for (int e = 1; e <= 4 && e < phi.order(); ++e) {
    WeierstrassElem c = phi.coeff(e);
    kmax = std::max(kmax, c.max_deriv());
  }

  WeierstrassPoint p0 = weierstrass_point_shift(Cx(0.0, 0.0), ell, kmax);
  p0.x = ell.omega2;
  std::array<Cx, 5> ref{};
  for (int e = 1; e <= 4 && e < phi.order(); ++e) ref[static_cast<size_t>(e)] = phi.coeff(e).eval(p0, b);
  Cx lnt4_0 = std::log(theta(4, Cx(0.0, 0.0), ell.q));
  Cx zts_0 = zeta_tilde_shift(Cx(0.0, 0.0), ell);
  Cx wps_0 = wp_tilde_shift(Cx(0.0, 0.0), ell);

  double max_rel = 0.0, max_t1 = 0.0, max_t2 = 0.0, max_p3 = 0.0, max_p4 = 0.0;
  for (double x : x_samples) {
    WeierstrassPoint px = weierstrass_point_shift(Cx(x, 0.0), ell, kmax);
    px.x = Cx(x, 0.0) + ell.omega2;
    std::array<Cx, 5> pd{};
    for (int e = 1; e <= 4 && e < phi.order(); ++e)
      pd[static_cast<size_t>(e)] = phi.coeff(e).eval(px, b) - ref[static_cast<size_t>(e)];

    Cx chi(kPi * x / (2.0 * w1), 0.0);
    Cx lnt4 = std::log(theta(4, chi, ell.q)) - lnt4_0;
    Cx zts = zeta_tilde_shift(Cx(x, 0.0), ell) - zts_0;   // d_x ln theta4
    Cx wps = wp_tilde_shift(Cx(x, 0.0), ell) - wps_0;     // -d_x^2 ln theta4

    Cx dL = (n - 1.0) * lnt4 + pd[1] / nu + pd[2] / (nu * nu) + pd[3] / (nu * nu * nu);
    Cx dR = (n - 1.0) * lnt4 + Cx(0.0, 1.0) * alpha / (2.0 * nu) * zts +
            alpha / (4.0 * nu * nu) * wps;
    max_rel = std::max(max_rel, std::abs(std::exp(dL - dR) - 1.0));
    max_t1 = std::max(max_t1, std::abs(pd[1] - Cx(0.0, 0.5 * alpha) * zts));
    max_t2 = std::max(max_t2, std::abs(pd[2] - 0.25 * alpha * wps));
    max_p3 = std::max(max_p3, std::abs(pd[3]));
    max_p4 = std::max(max_p4, std::abs(pd[4]));
  }

  double budget = 1.5 * (max_p3 / std::pow(nu, 3) + max_p4 / std::pow(nu, 4)) + 1e-12;
  double term_tol = 1e-10 * (1.0 + std::abs(alpha));
  if (max_t1 > term_tol) {
    rep.ok = false;
    rep.detail = "nu^-1 term defect " + fmt(max_t1) + " exceeds " + fmt(term_tol);
  } else if (max_t2 > term_tol) {
    rep.ok = false;
    rep.detail = "nu^-2 term defect " + fmt(max_t2) + " exceeds " + fmt(term_tol);
  } else if (max_rel > budget) {
    rep.ok = false;
    rep.detail = "ratio defect " + fmt(max_rel) + " exceeds budget " + fmt(budget);
  } else {
    rep.detail = "ratio defect " + fmt(max_rel) + " within budget " + fmt(budget) +
                 "; term defects " + fmt(max_t1) + ", " + fmt(max_t2);
  }
  return rep;
}

CheckReport lambda_from_F_check(double nu, double alpha, double q) {
  if (!(q >= 0.0) || q > 0.05)
    throw std::invalid_argument("lambda_from_F_check: validated window is 0 <= q <= 0.05");
  if (!(nu > 0.0)) throw std::invalid_argument("lambda_from_F_check: need nu > 0");
  CheckReport rep;
  if (q == 0.0) {
    rep.detail = "q = 0: both routes reduce to -nu^2";
    return rep;
  }
  auto fail = [&rep](const std::string& s) {
    if (rep.ok) {
      rep.ok = false;
      rep.detail = s;
    }
  };

  const double w1 = kPi / 2.0;
  const double pref = std::pow(kPi / w1, 2);
  const int Nq = 64;

  // alpha-linear cancellation: q dq (2 alpha ln(q^{1/24}/eta)) equals
  // (alpha/12)(1 - E2) term by term because n sigma_{-1}(n) = sigma_1(n).
  auto eta = log_eta_series(Nq);
  for (int m = 1; m <= Nq; ++m)
    if (mpq_class(m) * eta[static_cast<size_t>(m - 1)] != mpq_class(sigma_one(m))) {
      fail("n sigma_{-1}(n) != sigma_1(n) at n = " + std::to_string(m));
      break;
    }
  double s1 = 0.0;  // sum sigma_1(m) q^m, truncation far below rounding
  for (int m = Nq; m >= 1; --m)
    s1 = (s1 + static_cast<double>(sigma_one(m))) * q;
  double e2 = eisenstein_e2(Cx(q, 0.0)).real();
  double linear_residual = std::abs(2.0 * alpha * s1 - alpha / 12.0 * (1.0 - e2));
  if (linear_residual > 1e-10 * (1.0 + std::abs(alpha)))
    fail("alpha-linear part fails to cancel: residual " + fmt(linear_residual));

  // F route with the printed q-window against the quasimodular form.
  EllipticParams ell = EllipticParams::from_nome(Cx(q, 0.0), Cx(w1, 0.0));
  double qd = q + 6.0 * q * q + 12.0 * q * q * q;  // q dq (q + 3q^2 + 4q^3)
  double lam_f = -nu * nu - pref * pref * alpha * alpha * qd / (2.0 * nu * nu);
  double quasi = ((12.0 * ell.zeta1 * ell.zeta1 - ell.g2) / 48.0).real();
  double lam_q = -nu * nu + alpha * alpha * quasi / (nu * nu);
  double budget_q = 1.5 * pref * pref * 28.0 * alpha * alpha * std::pow(q, 4) / (2.0 * nu * nu);
  double diff_q = std::abs(lam_f - lam_q);
  if (diff_q > budget_q)
    fail("q-window defect " + fmt(diff_q) + " exceeds budget " + fmt(budget_q));

  // Tie-in with the dispersion series: its nu^-2 coefficient is the
  // quasimodular form, and the remaining gap is the nu^-4 tail.
  auto lam = lame_dispersion();
  ParamBindings b = lattice_bindings(alpha, ell);
  Cx c2 = lam.coeff(2).eval(b);
  if (std::abs(c2 - Cx(alpha * alpha * quasi, 0.0)) > 1e-9 * (1.0 + std::abs(c2)))
    fail("dispersion nu^-2 coefficient differs from the quasimodular form");
  Cx c4 = lam.coeff(4).eval(b);
  Cx lam_series = 0.0;
  for (int e = lam.lead(); e <= 6 && e < lam.order(); ++e) {
    ParamPoly c = lam.coeff(e);
    if (c.is_zero()) continue;
    lam_series += c.eval(b) * std::pow(Cx(nu, 0.0), -e);
  }
  double budget_full = 1.5 * std::abs(c4) / std::pow(nu, 4) + budget_q;
  double diff_full = std::abs(Cx(lam_f, 0.0) - lam_series);
  if (diff_full > budget_full)
    fail("dispersion defect " + fmt(diff_full) + " exceeds budget " + fmt(budget_full));

  if (rep.ok)
    rep.detail = "linear residual " + fmt(linear_residual) + "; q-window defect " +
                 fmt(diff_q) + " of " + fmt(budget_q) + "; dispersion defect " +
                 fmt(diff_full) + " of " + fmt(budget_full);
  return rep;
}

std::string matrix_to_csv(const Theta4Matrix& M) {
  std::ostringstream os;
  for (int i = 0; i < M.dim; ++i) {
    for (int j = 0; j < M.dim; ++j) {
      if (j) os << ',';
      os << M.at(i, j).to_string();
    }
    os << '\n';
  }
  return os.str();
}

std::string matrix_digest(const Theta4Matrix& M) {
  std::vector<size_t> width(static_cast<size_t>(M.dim), 0);
  for (int j = 0; j < M.dim; ++j)
    for (int i = 0; i < M.dim; ++i)
      width[static_cast<size_t>(j)] =
          std::max(width[static_cast<size_t>(j)], M.at(i, j).to_string().size());
  std::ostringstream os;
  for (int i = 0; i < M.dim; ++i) {
    for (int j = 0; j < M.dim; ++j) {
      std::string s = M.at(i, j).to_string();
      if (j) os << ' ';
      os << std::string(width[static_cast<size_t>(j)] - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace forge
