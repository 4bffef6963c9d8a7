#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forge/riccati.hpp"
#include "forge/weierstrass_ring.hpp"

using namespace forge;

namespace {
ParamPoly pc(long n, long d = 1) { return ParamPoly::constant(n, d); }
ParamPoly pp(Param p, int e = 1) { return ParamPoly::param(p, e); }

WeierstrassElem ptilde(int k = 0) { return WeierstrassElem::p_term(pc(1), k); }
}  // namespace

TEST_CASE("products fold back through the cubic") {
  ParamPoly z1 = pp(Param::zeta1), g2 = pp(Param::g2), g3 = pp(Param::g3);
  // p~ p~ = p~''/6 + 2 zeta1 p~ + g2/12 - zeta1^2.
  WeierstrassElem lhs = ptilde() * ptilde();
  WeierstrassElem rhs = WeierstrassElem::p_term(pc(1, 6), 2) +
                        WeierstrassElem::p_term(z1.scaled(GaussRat(2)), 0) +
                        WeierstrassElem::constant(g2.scaled(GaussRat(rat(1, 12))) - z1 * z1);
  CHECK(lhs == rhs);
  // p~' p~' = p~''''/30 - (2/5) g2 p~ + (2/5) g2 zeta1 - (3/5) g3.
  WeierstrassElem lhs2 = ptilde(1) * ptilde(1);
  WeierstrassElem rhs2 =
      WeierstrassElem::p_term(pc(1, 30), 4) +
      WeierstrassElem::p_term(g2.scaled(GaussRat(rat(-2, 5))), 0) +
      WeierstrassElem::constant((g2 * z1).scaled(GaussRat(rat(2, 5))) -
                                g3.scaled(GaussRat(rat(3, 5))));
  CHECK(lhs2 == rhs2);
  // p~ p~' = p~'''/12 + zeta1 p~'.
  CHECK(ptilde() * ptilde(1) ==
        WeierstrassElem::p_term(pc(1, 12), 3) + WeierstrassElem::p_term(z1, 1));
  // Associativity across both elimination tables.
  WeierstrassElem a = ptilde(), b = ptilde(1), c = ptilde(2);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * a) * b == a * (a * b));
  // Products with a secular or zeta~ part are outside the ring.
  CHECK_THROWS(WeierstrassElem::x_term(pc(1)) * a);
  CHECK_THROWS(WeierstrassElem::zeta_term(pc(1)) * a);
  CHECK(WeierstrassElem::x_term(pc(3)) * WeierstrassElem::constant(pc(2)) ==
        WeierstrassElem::x_term(pc(6)));
}

TEST_CASE("derivative and primitive") {
  CHECK(ptilde().antiderivative() == -WeierstrassElem::zeta_term(pc(1)));
  CHECK(WeierstrassElem::zeta_term(pc(1)).deriv() == -ptilde());
  CHECK(WeierstrassElem::x_term(pc(1)).deriv() == WeierstrassElem::constant(pc(1)));
  CHECK(WeierstrassElem::constant(pc(1)).antiderivative() == WeierstrassElem::x_term(pc(1)));
  CHECK(ptilde(3).antiderivative() == ptilde(2));
  CHECK_THROWS(WeierstrassElem::x_term(pc(1)).antiderivative());
  CHECK_THROWS(WeierstrassElem::zeta_term(pc(1)).antiderivative());
  WeierstrassElem f = ptilde(2).scaled(pp(Param::alpha)) + ptilde() + WeierstrassElem::constant(pc(5));
  CHECK(f.antiderivative().deriv() == f);
  CHECK(f.mean() == pc(5));
  // Parity: x, zeta~ and odd derivatives flip sign.
  WeierstrassElem g = WeierstrassElem::x_term(pc(1)) + WeierstrassElem::zeta_term(pc(2)) +
                      ptilde(1) + ptilde(2);
  CHECK(g.parity_flipped() == -WeierstrassElem::x_term(pc(1)) -
                                  WeierstrassElem::zeta_term(pc(2)) - ptilde(1) + ptilde(2));
}

TEST_CASE("large-energy chain for the elliptic potential") {
  ParamPoly al = pp(Param::alpha), z1 = pp(Param::zeta1), g2 = pp(Param::g2);
  WeierstrassElem u = ptilde().scaled(al);
  auto v = large_energy_chain(u, 6);
  CHECK(v[0] == ptilde().scaled(al.scaled(GaussRat(rat(1, 2)))));
  CHECK(v[1] == ptilde(1).scaled(al.scaled(GaussRat(rat(-1, 4)))));
  // v3 = a p~''/8 - a^2 p~^2/8, expanded onto the basis.
  ParamPoly a2 = al * al;
  WeierstrassElem v3 = WeierstrassElem::p_term(al.scaled(GaussRat(rat(1, 8))) -
                                                   a2.scaled(GaussRat(rat(1, 48))), 2) +
                       WeierstrassElem::p_term(-(a2 * z1).scaled(GaussRat(rat(1, 4))), 0) +
                       WeierstrassElem::constant((a2 * z1 * z1).scaled(GaussRat(rat(1, 8))) -
                                                 (a2 * g2).scaled(GaussRat(rat(1, 96))));
  CHECK(v[2] == v3);
  WeierstrassElem v4 =
      WeierstrassElem::p_term((al * (al - pc(3))).scaled(GaussRat(rat(1, 48))), 3) +
      WeierstrassElem::p_term((a2 * z1).scaled(GaussRat(rat(1, 4))), 1);
  CHECK(v[3] == v4);
  // Mean of v3 drives the leading curvature of the dispersion relation.
  CHECK(v[2].mean() == (z1 * z1 * a2).scaled(GaussRat(rat(1, 8))) -
                           (g2 * a2).scaled(GaussRat(rat(1, 96))));
  // Alternation v_l(-x) = -(-1)^l v_l(x).
  for (size_t l = 1; l <= v.size(); ++l)
    CHECK(v[l - 1].parity_flipped() == ((l % 2) ? v[l - 1] : -v[l - 1]));

  // Residual of v' + v^2 = u + 1/t^2 packed in t.
  std::vector<WeierstrassElem> coeffs;
  coeffs.push_back(unit_one<WeierstrassElem>());
  coeffs.push_back(WeierstrassElem());
  for (const auto& vi : v) coeffs.push_back(vi);
  auto vs = TruncatedSeries<WeierstrassElem>::from_coeffs("t", -1, coeffs, false);
  auto rhs = series_add(
      TruncatedSeries<WeierstrassElem>::monomial("t", -2, unit_one<WeierstrassElem>()),
      TruncatedSeries<WeierstrassElem>::monomial("t", 0, u));
  auto d = vs.map_coeffs<WeierstrassElem>([](int, const WeierstrassElem& c) { return c.deriv(); });
  auto resid = series_sub(series_add(d, series_mul(vs, vs)), rhs);
  REQUIRE(resid.order() >= 4);
  for (int e = resid.lead(); e < resid.order(); ++e) CHECK(resid.coeff(e).is_zero());
  CHECK(resid.lead() >= resid.order());

  // Raw exponent coefficient at t^3: the primitive of v3 equals
  // -[2a(a-6) p~' - 24 a^2 zeta1 zeta~ + a^2 (g2 - 12 zeta1^2) x] / 96.
  WeierstrassElem e3 = v[2].antiderivative();
  WeierstrassElem want =
      WeierstrassElem::p_term((al * (al - pc(6))).scaled(GaussRat(rat(-2, 96))), 1) +
      WeierstrassElem::zeta_term((a2 * z1).scaled(GaussRat(rat(24, 96)))) +
      WeierstrassElem::x_term((a2 * (g2 - (z1 * z1).scaled(GaussRat(12)))).scaled(
          GaussRat(rat(-1, 96))));
  CHECK(e3 == want);
}
