#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "forge/closed_forms.hpp"
#include "forge/dispersion.hpp"
#include "forge/elliptic.hpp"
#include "forge/hill.hpp"
#include "forge/riccati.hpp"
#include "forge/weierstrass_ring.hpp"

using namespace forge;

namespace {

constexpr double kPi = 3.14159265358979323846;

ParamPoly pp(Param p) { return ParamPoly::param(p); }

FourierTrigPoly trig_u() {
  return FourierTrigPoly::harmonic(2, false, pp(Param::h) * ParamPoly::constant(GaussRat(2)));
}

// Partial sum of a series in 1/nu over exponents <= e_max.
Cx eval_through(const TruncatedSeries<ParamPoly>& s, const ParamBindings& b, double nu,
                int e_max) {
  Cx acc = 0.0;
  for (int e = s.lead(); e <= e_max && e < s.order(); ++e) {
    ParamPoly c = s.coeff(e);
    if (c.is_zero()) continue;
    acc += c.eval(b) * std::pow(Cx(nu), -e);
  }
  return acc;
}

// Least-squares slope of ln y against ln x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double n = static_cast<double>(x.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("free equation: monodromy is the exact rotation") {
  auto zero = [](Cx) { return Cx(0.0); };
  double nu0 = 2.3;
  double th = nu0 * kPi;
  auto r = monodromy(zero, Cx(-nu0 * nu0), kPi, 1e-13);
  CHECK(std::abs(r.m[0][0] - std::cos(th)) < 1e-11);
  CHECK(std::abs(r.m[0][1] - std::sin(th) / nu0) < 1e-11);
  CHECK(std::abs(r.m[1][0] + nu0 * std::sin(th)) < 1e-10);
  CHECK(std::abs(r.m[1][1] - std::cos(th)) < 1e-11);
  CHECK(std::abs(r.trace - 2.0 * std::cos(th)) < 1e-11);
  CHECK(std::abs(r.nu - nu0) < 1e-11);
  CHECK(std::abs(r.nu_paired + nu0) < 1e-11);
  CHECK(r.wronskian_defect < 1e-12);
  CHECK(r.steps > 0);
  CHECK(r.tolerance == 1e-13);
  CHECK_FALSE(r.near_degenerate);

  // Integer exponent: the matrix is -I and cos alone cannot separate branches;
  // the entry-level extraction still lands on the reference branch.
  auto r7 = monodromy(zero, Cx(-49.0), kPi, 1e-13);
  CHECK(std::abs(r7.nu - 7.0) < 1e-9);
  CHECK(r7.near_degenerate);

  CHECK_THROWS(monodromy(zero, Cx(-1.0), std::vector<Cx>{Cx(0.0)}, Cx(1.0), 1e-12));
  CHECK_THROWS(monodromy(zero, Cx(-1.0), kPi, 1e-14));
}

TEST_CASE("trig dispersion composed with the oracle is the identity at large energy") {
  auto chain = large_energy_chain(trig_u(), 12);
  auto lam = dispersion_from_periods(chain);
  REQUIRE(lam.order() > 8);
  ParamBindings b;
  b[Param::h] = 1.0;
  auto u = trig_potential_fn(1.0);
  double c8 = std::abs(lam.coeff(8).eval(b));

  std::vector<double> nus{6.0, 8.0, 10.0, 12.0}, errs;
  for (double nu : nus) {
    Cx ls = eval_through(lam, b, nu, 6);
    auto r = monodromy(u, ls, kPi, 1e-13);
    CHECK(r.wronskian_defect < 1e-9);
    double err = std::abs(r.nu - Cx(nu));
    errs.push_back(err);
    // The truncation error model: the measured defect sits at the first
    // omitted order, well inside the C < 10 envelope and not far below it.
    double bound = c8 / std::pow(nu, 8) / (2.0 * nu);
    CHECK(err < 10.0 * bound);
    CHECK(err > 0.2 * bound);
  }
  CHECK(errs[2] < 1e-6);  // nu = 10 with three kept corrections

  double slope = fit_slope(nus, errs);  // first omitted order predicts -9
  CHECK(slope < -9.0 * 0.85);
  CHECK(slope > -9.0 * 1.15);

  // Report round-trip for the nu = 10 row.
  Cx ls10 = eval_through(lam, b, 10.0, 6);
  auto r10 = monodromy(u, ls10, kPi, 1e-13);
  ErrorReport rep{ls10, Cx(10.0), r10.nu, std::abs(r10.nu - Cx(10.0)),
                  c8 / std::pow(10.0, 8) / 20.0, r10.wronskian_defect};
  CHECK(rep.abs_err < 10.0 * rep.omitted_term_bound);
  std::string j = to_json(rep);
  CHECK(j.find("\"abs_err\"") != std::string::npos);
  CHECK(j.find("\"omitted_term_bound\"") != std::string::npos);
  CHECK(j.find("\"abs_err\"") < j.find("\"lambda\""));  // keys stay sorted
}

TEST_CASE("elliptic dispersion composed with the oracle is the identity at large energy") {
  auto chain = large_energy_chain(WeierstrassElem::p_term(pp(Param::alpha)), 12);
  auto lam = dispersion_from_periods(chain);
  auto ell = EllipticParams::from_nome(0.05, kPi / 2);
  ParamBindings b;
  b[Param::alpha] = 6.0;
  b[Param::zeta1] = ell.zeta1;
  b[Param::g2] = ell.g2;
  b[Param::g3] = ell.g3;
  auto u = elliptic_potential_fn(6.0, ell);
  // Integration path shifted off the real axis, where the potential has its
  // poles; the exponent does not depend on the contour.
  std::vector<Cx> path{0.5 * ell.omega2, 0.5 * ell.omega2 + 2.0 * ell.omega1};
  double c8 = std::abs(lam.coeff(8).eval(b));

  std::vector<double> nus{6.0, 8.0, 10.0, 12.0}, errs;
  for (double nu : nus) {
    Cx ls = eval_through(lam, b, nu, 6);
    auto r = monodromy(u, ls, path, Cx(nu), 1e-13);
    CHECK(r.wronskian_defect < 1e-9);
    double err = std::abs(r.nu - Cx(nu));
    errs.push_back(err);
    double bound = c8 / std::pow(nu, 8) / (2.0 * nu);
    CHECK(err < 10.0 * bound);
    CHECK(err > 0.1 * bound);
  }
  CHECK(errs[2] < 1e-6);

  double slope = fit_slope(nus, errs);
  CHECK(slope < -9.0 * 0.85);
  CHECK(slope > -9.0 * 1.15);
}

TEST_CASE("matching eigenvalue tracks the small-energy expansion at the upper minimum") {
  auto lam_s = small_lambda_series(ProblemId::mathieu_minpi2);
  ParamBindings b;
  b[Param::nu] = 0.5;  // ground band
  std::vector<double> errs;
  for (double h : {100.0, 400.0, 1600.0}) {
    double s = 1.0 / std::sqrt(h);
    Cx ls = series_eval(lam_s, b, Cx(s));
    auto u = trig_potential_fn(h);
    Cx lo = matching_eigenvalue(u, ls, Cx(0.0), Cx(kPi / 2), 1e-13);
    CHECK(std::abs(ls - lo) < 1e-3 * std::abs(ls));  // same level, not a neighbor
    errs.push_back(std::abs(ls - lo));
  }
  CHECK(errs[0] < 1e-4);
  // First omitted order h^{-3/2}: quadrupling h divides the defect by 8.
  for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
    double ratio = errs[i + 1] / errs[i];
    CHECK(ratio > 0.125 * 0.75);
    CHECK(ratio < 0.125 * 1.25);
  }
}

TEST_CASE("wave function error: free case is exact") {
  auto zero = [](Cx) { return Cx(0.0); };
  double nu0 = 1.7;
  auto log_psi = [nu0](Cx x) { return Cx(0.0, 1.0) * nu0 * x; };
  auto dlog_psi = [nu0](Cx) { return Cx(0.0, 1.0) * nu0; };
  std::vector<Cx> grid{0.0, 0.5, 1.0, 1.5};
  auto rep = wavefunction_error(log_psi, dlog_psi, zero, Cx(-nu0 * nu0), grid, 1e-13);
  CHECK(rep.abs_err < 1e-11);
  CHECK(rep.residual < 1e-9);
  CHECK_THROWS(wavefunction_error(log_psi, dlog_psi, zero, Cx(-nu0 * nu0), {Cx(0.0)}, 1e-12));
}

TEST_CASE("wave function error decays at the first omitted order in 1/nu") {
  auto chain = large_energy_chain(trig_u(), 8);
  auto sq = sqrt_lambda_of_nu(floquet_exponent_series(chain));
  auto phi = refloquet_wavefunction(wavefunction_exponent(chain, false), sq);
  auto lam = dispersion_from_periods(chain);
  ParamBindings b;
  b[Param::h] = 1.0;
  auto u = trig_potential_fn(1.0);

  std::vector<FourierTrigPoly> cs, ds;
  for (int e = -1; e <= 3; ++e) {
    FourierTrigPoly c = phi.coeff(e);
    cs.push_back(c);
    ds.push_back(c.deriv());
  }
  std::vector<Cx> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> nus{6.0, 9.0, 12.0}, errs, residuals;
  for (double nu : nus) {
    auto log_psi = [&, nu](Cx x) {
      Cx a = 0.0;
      for (int e = -1; e <= 3; ++e) a += cs[e + 1].eval(x, b) * std::pow(Cx(nu), -e);
      return a;
    };
    auto dlog_psi = [&, nu](Cx x) {
      Cx a = 0.0;
      for (int e = -1; e <= 3; ++e) a += ds[e + 1].eval(x, b) * std::pow(Cx(nu), -e);
      return a;
    };
    Cx ls = eval_through(lam, b, nu, 6);
    auto rep = wavefunction_error(log_psi, dlog_psi, u, ls, grid, 1e-13);
    errs.push_back(rep.abs_err);
    residuals.push_back(rep.residual);
  }
  // Exponent kept through nu^-3: the pointwise defect drops as nu^-4.
  double slope = fit_slope(nus, errs);
  CHECK(slope < -4.0 * 0.85);
  CHECK(slope > -4.0 * 1.15);
  CHECK(residuals[1] < residuals[0]);
  CHECK(residuals[2] < residuals[1]);
}

TEST_CASE("wave function residual scales with the kept window at small energy") {
  // Log-derivative of the decaying branch at the upper minimum, complete
  // through s^2; its s^2 coefficient has a pole at the minimum itself, so the
  // grid stays to one side.
  auto v = chain_dlog(ProblemId::mathieu_minpi2, false, 5);
  REQUIRE(v.order() == 3);
  auto lam_s = small_lambda_series(ProblemId::mathieu_minpi2);
  ParamBindings b;
  b[Param::nu] = 0.5;
  double x0 = kPi / 2 - 0.45;
  std::vector<Cx> grid{x0, kPi / 2 - 0.35, kPi / 2 - 0.25, kPi / 2 - 0.15};

  std::vector<double> residuals;
  for (double h : {100.0, 400.0, 1600.0}) {
    double s = 1.0 / std::sqrt(h);
    Cx ls = series_eval(lam_s, b, Cx(s));
    auto u = trig_potential_fn(h);
    auto vfun = [&, s](Cx x) {
      Cx a = 0.0;
      for (int e = v.lead(); e < v.order(); ++e) {
        JacobiElem c = v.coeff(e);
        if (c.is_zero()) continue;
        a += c.eval(std::sin(x), std::cos(x), Cx(1.0), b) * std::pow(Cx(s), e);
      }
      return a;
    };
    auto log_psi = [&](Cx x) {
      int n = 2000;  // trapezoid quadrature of the log-derivative
      Cx acc = 0.0, dx = (x - x0) / static_cast<double>(n);
      for (int i = 0; i < n; ++i)
        acc += 0.5 * (vfun(x0 + static_cast<double>(i) * dx) +
                      vfun(x0 + static_cast<double>(i + 1) * dx)) *
               dx;
      return acc;
    };
    auto rep = wavefunction_error(log_psi, vfun, u, ls, grid, 1e-13);
    CHECK(rep.abs_err < 1e-5);
    residuals.push_back(rep.residual);
  }
  // Window complete through s^2: quadrupling h divides the defect by 4.
  for (std::size_t i = 0; i + 1 < residuals.size(); ++i) {
    double ratio = residuals[i + 1] / residuals[i];
    CHECK(ratio > 0.25 * 0.5);
    CHECK(ratio < 0.25 * 2.0);
  }
}

TEST_CASE("reports serialize deterministically with sorted keys") {
  ErrorReport r{Cx(-4.0, 0.5), Cx(2.0, 0.0), Cx(2.5, -0.5), 0.25, 0.125, 0.0};
  CHECK(to_json(r) ==
        "{\"abs_err\":0.25,\"lambda\":[-4.0,0.5],\"nu_oracle\":[2.5,-0.5],"
        "\"nu_series\":[2.0,0.0],\"omitted_term_bound\":0.125,\"wronskian_defect\":0.0}");
  WaveErrorReport w{Cx(1.0, 0.0), 0.5, 0.25, 7};
  CHECK(to_json(w) == "{\"abs_err\":0.5,\"lambda\":[1.0,0.0],\"residual\":0.25,\"steps\":7}");
}
