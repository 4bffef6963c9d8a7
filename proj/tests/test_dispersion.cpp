#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "forge/dispersion.hpp"
#include "forge/fourier_ring.hpp"
#include "forge/riccati.hpp"
#include "forge/weierstrass_ring.hpp"

using namespace forge;

namespace {

ParamPoly pc(long n, long d = 1) { return ParamPoly::constant(n, d); }
ParamPoly pp(Param p, int e = 1) { return ParamPoly::param(p, e); }
GaussRat gi() { return GaussRat::unit_i(); }
GaussRat gr(long n, long d = 1) { return GaussRat(rat(n, d)); }

FourierTrigPoly trig_potential() {
  return FourierTrigPoly::harmonic(2, false, pp(Param::h).scaled(GaussRat(2)));
}

GaussRat two_i_pow(int m) {
  GaussRat base = m >= 0 ? GaussRat(2) * gi() : gr(-1, 2) * gi();  // (2i)^{-1} = -i/2
  GaussRat r(1);
  for (int j = 0; j < (m >= 0 ? m : -m); ++j) r = r * base;
  return r;
}

ParamPoly rename_param(const ParamPoly& p, Param from, Param to) {
  ParamPoly out;
  for (const auto& [d, rest] : p.decompose(from))
    out += (d == 0) ? rest : rest * ParamPoly::param(to, d);
  return out;
}

ParamPoly drop_kprime(const ParamPoly& p) {
  ParamPoly out;
  for (const auto& [d, rest] : p.decompose(Param::kprime)) out += rest;
  return out;
}

}  // namespace

TEST_CASE("zero potential reproduces the free dispersion exactly") {
  std::vector<FourierTrigPoly> chain(6);
  auto sq = sqrt_lambda_of_nu(floquet_exponent_series(chain));
  CHECK(sq.coeff(-1) == pc(1).scaled(gi()));
  for (int e = 0; e < sq.order(); ++e) CHECK(sq.coeff(e).is_zero());
  auto lam = lambda_of_nu(sq);
  CHECK(lam.coeff(-2) == pc(-1));
  for (int e = -1; e < lam.order(); ++e) CHECK(lam.coeff(e).is_zero());
}

TEST_CASE("cosine potential: eigenvalue series through the fourth inverse order") {
  auto chain = large_energy_chain(trig_potential(), 8);
  auto inu = floquet_exponent_series(chain);
  for (int l = 2; l <= 8; l += 2) CHECK(inu.coeff(l).is_zero());

  auto sq = sqrt_lambda_of_nu(inu);
  ParamPoly h2 = pp(Param::h, 2);
  ParamPoly h4 = pp(Param::h, 4);
  CHECK(sq.coeff(-1) == pc(1).scaled(gi()));
  for (int e : {0, 1, 2, 4, 6}) CHECK(sq.coeff(e).is_zero());
  CHECK(sq.coeff(3) == h2.scaled(gr(1, 4) * gi()));
  CHECK(sq.coeff(5) == h2.scaled(gr(1, 4) * gi()));
  CHECK(sq.coeff(7) == (h2.scaled(gr(1, 4)) + h4.scaled(gr(3, 64))).scaled(gi()));

  auto lam = lambda_of_nu(sq);
  REQUIRE(lam.order() >= 7);
  CHECK(lam.coeff(-2) == pc(-1));
  for (int e : {-1, 0, 1, 3, 5}) CHECK(lam.coeff(e).is_zero());
  CHECK(lam.coeff(2) == h2.scaled(gr(-1, 2)));
  CHECK(lam.coeff(4) == h2.scaled(gr(-1, 2)));
  CHECK(lam.coeff(6) == h2.scaled(gr(-1, 2)) + h4.scaled(gr(-5, 32)));

  // Squaring an i*nu(t) series directly starts at +nu^2 and must be rejected.
  CHECK_THROWS_AS(lambda_of_nu(inu), std::logic_error);
}

TEST_CASE("elliptic potential: eigenvalue series through the second inverse order") {
  auto chain = large_energy_chain(WeierstrassElem::p_term(pp(Param::alpha)), 6);
  auto sq = sqrt_lambda_of_nu(floquet_exponent_series(chain));
  ParamPoly a1 = pp(Param::alpha);
  ParamPoly a2 = pp(Param::alpha, 2);
  ParamPoly a3 = pp(Param::alpha, 3);
  ParamPoly z1 = pp(Param::zeta1);
  ParamPoly g2 = pp(Param::g2);
  ParamPoly g3 = pp(Param::g3);
  ParamPoly c2 = (a2 * (pp(Param::zeta1, 2).scaled(GaussRat(12)) - g2)).scaled(gr(1, 48));
  ParamPoly c4 = (a3 * (pp(Param::zeta1, 3).scaled(GaussRat(20)) - g2 * z1 - g3) -
                  a2 * ((g2 * z1).scaled(GaussRat(2)) - g3.scaled(GaussRat(3))))
                     .scaled(gr(1, 80));

  CHECK(sq.coeff(-1) == pc(1).scaled(gi()));
  for (int e : {0, 1, 2, 4}) CHECK(sq.coeff(e).is_zero());
  CHECK(sq.coeff(3) == c2.scaled(gr(-1, 2) * gi()));
  CHECK(sq.coeff(5) == c4.scaled(gr(-1, 2) * gi()));

  auto lam = lambda_of_nu(sq);
  REQUIRE(lam.order() >= 5);
  CHECK(lam.coeff(-2) == pc(-1));
  for (int e : {-1, 0, 1, 3}) CHECK(lam.coeff(e).is_zero());
  CHECK(lam.coeff(2) == c2);
  CHECK(lam.coeff(4) == c4);
}

TEST_CASE("cosine potential: regrouped wave-function exponent") {
  auto chain = large_energy_chain(trig_potential(), 8);
  auto sq = sqrt_lambda_of_nu(floquet_exponent_series(chain));
  auto expo = wavefunction_exponent(chain);
  auto phi = refloquet_wavefunction(expo, sq);
  ParamPoly h1 = pp(Param::h);

  CHECK(phi.coeff(-1) == FourierTrigPoly::secular(pc(1).scaled(gi())));
  CHECK(phi.coeff(0).is_zero());
  CHECK(phi.coeff(1) == FourierTrigPoly::harmonic(2, true, h1.scaled(gr(-1, 2) * gi())));
  CHECK(phi.coeff(2) == FourierTrigPoly::harmonic(2, false, h1.scaled(gr(1, 2))));
  FourierTrigPoly r3 = FourierTrigPoly::harmonic(2, true, h1.scaled(gr(-1, 2) * gi())) +
                       FourierTrigPoly::harmonic(4, true, pp(Param::h, 2).scaled(gr(-1, 16) * gi()));
  CHECK(phi.coeff(3) == r3);

  auto phim = refloquet_wavefunction(wavefunction_exponent(chain, true), sq);
  for (int e = -1; e <= 3; ++e) CHECK(phim.coeff(e) == phi.coeff(e).parity_flipped());

  auto bad = series_add(
      sq, TruncatedSeries<ParamPoly>::monomial("r", 3, pp(Param::h, 2).scaled(gr(1, 7))));
  CHECK_THROWS_AS(refloquet_wavefunction(expo, bad), std::runtime_error);
}

TEST_CASE("elliptic potential: regrouped wave-function exponent") {
  auto chain = large_energy_chain(WeierstrassElem::p_term(pp(Param::alpha)), 6);
  auto sq = sqrt_lambda_of_nu(floquet_exponent_series(chain));
  auto phi = refloquet_wavefunction(wavefunction_exponent(chain), sq);
  ParamPoly a1 = pp(Param::alpha);

  CHECK(phi.coeff(-1) == WeierstrassElem::x_term(pc(1).scaled(gi())));
  CHECK(phi.coeff(0).is_zero());
  CHECK(phi.coeff(1) == WeierstrassElem::zeta_term(a1.scaled(gr(1, 2) * gi())));
  CHECK(phi.coeff(2) == WeierstrassElem::p_term(a1.scaled(gr(1, 4))));
  WeierstrassElem r3 =
      WeierstrassElem::zeta_term((pp(Param::alpha, 2) * pp(Param::zeta1)).scaled(gr(1, 4) * gi())) +
      WeierstrassElem::p_term(
          (pp(Param::alpha, 2) - a1.scaled(GaussRat(6))).scaled(gr(-1, 48) * gi()), 1);
  CHECK(phi.coeff(3) == r3);

  auto phim = refloquet_wavefunction(wavefunction_exponent(chain, true), sq);
  for (int e = -1; e <= 3; ++e) CHECK(phim.coeff(e) == phi.coeff(e).parity_flipped());
}

TEST_CASE("strong-coupling dispersion data degenerates to the trig tables") {
  auto check_limit = [](const TruncatedSeries<ParamPoly>& ell,
                        const TruncatedSeries<ParamPoly>& tri) {
    REQUIRE(ell.lead() == -1);
    REQUIRE(tri.lead() == -1);
    REQUIRE(ell.order() == 3);
    REQUIRE(tri.order() == 3);
    for (int e = -1; e < ell.order(); ++e) {
      // Match under k g -> 2i g_trig, i.e. s_ell = (k / 2i) s_trig with k -> 0.
      ParamPoly kpow = (e == 0) ? pc(1) : ParamPoly::param(Param::k, e);
      ParamPoly mapped = drop_kprime((ell.coeff(e) * kpow).scaled(two_i_pow(-e)));
      auto bydeg = mapped.decompose(Param::k);
      REQUIRE(bydeg.count(0) == 1);
      for (const auto& [d, part] : bydeg) {
        if (d == 0)
          CHECK(part == rename_param(tri.coeff(e), Param::nu, Param::mu));
        else
          CHECK(d >= 2);
      }
    }
  };
  check_limit(small_spectral_series(ProblemId::lame_z0),
              small_spectral_series(ProblemId::mathieu_min0));
  check_limit(small_spectral_series(ProblemId::lame_zK),
              small_spectral_series(ProblemId::mathieu_minpi2));
}

TEST_CASE("eigenvalue offsets at the two expansion points") {
  auto m0 = small_lambda_series(ProblemId::mathieu_min0);
  CHECK(m0.lead() == -2);
  CHECK(m0.coeff(-2) == pc(-2));
  auto mp = small_lambda_series(ProblemId::mathieu_minpi2);
  CHECK(mp.coeff(-2) == pc(2));
  auto z0 = small_lambda_series(ProblemId::lame_z0);
  CHECK(z0.lead() == -1);
  auto zk = small_lambda_series(ProblemId::lame_zK);
  CHECK(zk.coeff(-2) == -pp(Param::k, 2));
  for (int e = -1; e < 3; ++e) {
    CHECK(m0.coeff(e) == small_spectral_series(ProblemId::mathieu_min0).coeff(e));
    CHECK(zk.coeff(e) == small_spectral_series(ProblemId::lame_zK).coeff(e));
  }
}

TEST_CASE("dispersion substitution regroups the density chains") {
  SUBCASE("trig chain at the lower minimum") {
    auto pr = small_energy_problem(ProblemId::mathieu_min0);
    auto chain = small_energy_chain(pr, 5);
    auto spec = small_spectral_series(pr.id);
    auto out = substitute_small_dispersion(chain, spec, pr.spectral);
    CHECK(out.lead() == -1);
    CHECK(out.order() == 3);
    CHECK(out.coeff(-1) == pr.branch);
    JacobiElem want0 = JacobiElem::term(pc(-1, 2), -1, 1, 0, true) +
                       JacobiElem::term(pp(Param::nu).scaled(-gi()), -1, 0, 0, true);
    CHECK(out.coeff(0) == want0);

    // Flipped branch carries the opposite Floquet sign at the same dispersion.
    auto chf = small_energy_chain(small_energy_problem(pr.id, true), 5);
    auto outf = substitute_small_dispersion(chf, spec, pr.spectral);
    CHECK(outf.coeff(-1) == -pr.branch);
    JacobiElem want0f = JacobiElem::term(pc(-1, 2), -1, 1, 0, true) +
                        JacobiElem::term(pp(Param::nu).scaled(gi()), -1, 0, 0, true);
    CHECK(outf.coeff(0) == want0f);
  }

  SUBCASE("elliptic chain at the first point") {
    auto pr = small_energy_problem(ProblemId::lame_z0);
    auto chain = small_energy_chain(pr, 5);
    auto out = substitute_small_dispersion(chain, small_spectral_series(pr.id), pr.spectral);
    CHECK(out.coeff(-1) == pr.branch);
    JacobiElem want0 = JacobiElem::term(pc(-1, 2), -1, 1, 1, false) +
                       JacobiElem::term(pp(Param::mu).scaled(-gi()), -1, 0, 0, false);
    CHECK(out.coeff(0) == want0);
  }

  SUBCASE("elliptic chain at the second point") {
    auto pr = small_energy_problem(ProblemId::lame_zK);
    auto chain = small_energy_chain(pr, 5);
    auto out = substitute_small_dispersion(chain, small_spectral_series(pr.id), pr.spectral);
    CHECK(out.coeff(-1) == pr.branch);
    JacobiElem want0 = JacobiElem::term(ParamPoly::constant(gr(-1, 2) * gi()), 1, -1, 1, false) +
                       JacobiElem::term(pp(Param::mu).scaled(-gi()), 0, -1, 0, false);
    CHECK(out.coeff(0) == want0);
  }

  SUBCASE("window follows the shortest chain") {
    auto pr = small_energy_problem(ProblemId::mathieu_min0);
    auto spec = small_spectral_series(pr.id);
    auto out = substitute_small_dispersion(small_energy_chain(pr, 4), spec, pr.spectral);
    CHECK(out.order() == 2);
    CHECK_THROWS_AS(substitute_small_dispersion(
                        small_energy_chain(pr, 4),
                        TruncatedSeries<ParamPoly>::monomial("s", 0, pc(1)), pr.spectral),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        substitute_small_dispersion(std::vector<JacobiElem>{}, spec, pr.spectral),
        std::invalid_argument);
  }
}

TEST_CASE("numeric evaluation of parameter series") {
  auto s = TruncatedSeries<ParamPoly>::from_coeffs(
      "x", -1, {pp(Param::h), pc(3), pp(Param::kprime, -2)}, false);
  ParamBindings b{{Param::h, 2.0}, {Param::k, 0.6}};
  std::complex<double> val = series_eval(s, b, 2.0);
  CHECK(std::abs(val - std::complex<double>(7.125, 0.0)) < 1e-12);
}
