#include "forge/closed_forms.hpp"

#include <stdexcept>
#include <vector>

#include "forge/dispersion.hpp"

namespace forge {

namespace {

ParamPoly pc(long n, long d = 1) { return ParamPoly::constant(n, d); }
ParamPoly pp(Param p, int e = 1) { return ParamPoly::param(p, e); }
GaussRat gi() { return GaussRat::unit_i(); }
GaussRat gr(long n, long d = 1) { return GaussRat(rat(n, d)); }

JacobiElem tt(ParamPoly c, int p, int q) { return JacobiElem::term(std::move(c), p, q, 0, true); }
JacobiElem et(ParamPoly c, int p, int q, int d) {
  return JacobiElem::term(std::move(c), p, q, d, false);
}

JacobiElem trig_const(ParamPoly c) { return JacobiElem::constant(std::move(c), true); }

// Multiple angles of the underlying trig coordinate.
JacobiElem cos2x() { return trig_const(pc(1)) + tt(pc(-2), 2, 0); }
JacobiElem cos3x() { return tt(pc(1), 0, 1) + tt(pc(-4), 2, 1); }
JacobiElem cos4x() { return trig_const(pc(1)) + tt(pc(-8), 2, 0) + tt(pc(8), 4, 0); }
JacobiElem sin3x() { return tt(pc(3), 1, 0) + tt(pc(-4), 3, 0); }

std::vector<JacobiElem> dlog_trig_first(const GaussRat& sg) {
  ParamPoly nu1 = pp(Param::nu);
  ParamPoly nu2 = pp(Param::nu, 2);
  ParamPoly nu3 = pp(Param::nu, 3);
  std::vector<JacobiElem> c;
  // 2i cos x
  c.push_back(tt(pc(2).scaled(sg * gi()), 0, 1).deriv());
  // power prefactors: i nu / sin - cos / (2 sin)
  c.push_back(tt(nu1.scaled(sg * gi()), -1, 0) + tt(pc(-1, 2), -1, 1));
  // csc^2/2^5 [4 nu + i(3 - 4 nu^2) cos x + 4 nu cos 2x]
  JacobiElem inner1 = trig_const(nu1.scaled(GaussRat(4))) +
                      tt((pc(3) - nu2.scaled(GaussRat(4))).scaled(sg * gi()), 0, 1) +
                      cos2x().scaled(nu1.scaled(GaussRat(4)));
  c.push_back((tt(pc(1), -2, 0) * inner1).scaled(gr(1, 32)).deriv());
  // -csc^4/2^10 [42 - 124 nu^2 - i(155 nu - 36 nu^3) cos x + 4 cos 2x
  //              + i(3 nu - 4 nu^3) cos 3x + 2(1 - 2 nu^2) cos 4x]
  JacobiElem inner2 =
      trig_const(pc(42) - nu2.scaled(GaussRat(124))) +
      tt((nu1.scaled(GaussRat(155)) - nu3.scaled(GaussRat(36))).scaled(-sg * gi()), 0, 1) +
      cos2x().scaled(pc(4)) +
      cos3x().scaled((nu1.scaled(GaussRat(3)) - nu3.scaled(GaussRat(4))).scaled(sg * gi())) +
      cos4x().scaled(pc(2) - nu2.scaled(GaussRat(4)));
  c.push_back((tt(pc(1), -4, 0) * inner2).scaled(gr(-1, 1024)).deriv());
  return c;
}

std::vector<JacobiElem> dlog_trig_second(const GaussRat& sg) {
  ParamPoly nu1 = pp(Param::nu);
  ParamPoly nu2 = pp(Param::nu, 2);
  ParamPoly nu3 = pp(Param::nu, 3);
  std::vector<JacobiElem> c;
  // 2 sin x
  c.push_back(tt(pc(2).scaled(sg), 1, 0).deriv());
  // power prefactors: sin / (2 cos) - nu / cos
  c.push_back(tt(pc(1, 2), 1, -1) + tt(nu1.scaled(-sg), 0, -1));
  // sec^2/2^5 [8 nu - (3 + 4 nu^2) sin x]
  JacobiElem inner1 = trig_const(nu1.scaled(GaussRat(8))) +
                      tt((pc(3) + nu2.scaled(GaussRat(4))).scaled(-sg), 1, 0);
  c.push_back((tt(pc(1), 0, -2) * inner1).scaled(gr(1, 32)).deriv());
  // sec^4/2^10 [39 + 112 nu^2 - (155 nu + 36 nu^3) sin x - (3 nu + 4 nu^3) sin 3x
  //             - 8(1 + 2 nu^2) cos 2x + cos 4x]
  JacobiElem inner2 =
      trig_const(pc(39) + nu2.scaled(GaussRat(112))) +
      tt((nu1.scaled(GaussRat(155)) + nu3.scaled(GaussRat(36))).scaled(-sg), 1, 0) +
      sin3x().scaled((nu1.scaled(GaussRat(3)) + nu3.scaled(GaussRat(4))).scaled(-sg)) +
      cos2x().scaled(pc(-8) - nu2.scaled(GaussRat(16))) + cos4x();
  c.push_back((tt(pc(1), 0, -4) * inner2).scaled(gr(1, 1024)).deriv());
  return c;
}

std::vector<JacobiElem> dlog_elliptic_first(const GaussRat& sg) {
  ParamPoly mu1 = pp(Param::mu);
  ParamPoly mu2 = pp(Param::mu, 2);
  ParamPoly mu3 = pp(Param::mu, 3);
  ParamPoly k2 = pp(Param::k, 2);
  std::vector<JacobiElem> c;
  // d ln(dn - k cn) = k sn
  c.push_back(et(pp(Param::k).scaled(sg), 1, 0, 0));
  // -(1/2) d ln sn + i mu d ln((dn + cn)/sn) = -cn dn/(2 sn) - i mu / sn
  c.push_back(et(pc(-1, 2), -1, 1, 1) + et(mu1.scaled(-sg * gi()), -1, 0, 0));
  // 1/(2^4 k) [(8 i mu + (3 - 4 mu^2) cn dn)/sn^2] plus (1/8) d ln(dn - k cn)
  JacobiElem r1 = et((mu1 * pp(Param::k, -1)).scaled(gi() * gr(1, 2)), -2, 0, 0) +
                  et(((pc(3) - mu2.scaled(GaussRat(4))) * pp(Param::k, -1)).scaled(sg * gr(1, 16)),
                     -2, 1, 1);
  c.push_back(r1.deriv() + et(pp(Param::k).scaled(sg * gr(1, 8)), 1, 0, 0));
  // 1/(2^6 k^2) [(12 - 32 mu^2 + i(38 mu - 8 mu^3) cn dn)/sn^4
  //              + (1 + k^2)(3 - 4 mu^2)(i mu cn dn - 2)/sn^2]
  ParamPoly opk2 = pc(1) + k2;
  ParamPoly band = opk2 * (pc(3) - mu2.scaled(GaussRat(4)));
  JacobiElem b2 = et(pc(12) - mu2.scaled(GaussRat(32)), -4, 0, 0) +
                  et((mu1.scaled(GaussRat(38)) - mu3.scaled(GaussRat(8))).scaled(sg * gi()), -4, 1, 1) +
                  et((band * mu1).scaled(sg * gi()), -2, 1, 1) +
                  et(band.scaled(GaussRat(-2)), -2, 0, 0);
  c.push_back(b2.scaled(pp(Param::k, -2)).scaled(gr(1, 64)).deriv());
  return c;
}

std::vector<JacobiElem> dlog_elliptic_first_compact(const GaussRat& sg) {
  ParamPoly mu1 = pp(Param::mu);
  std::vector<JacobiElem> c;
  // (1/2)[d ln(dn - k cn) - d ln(dn + k cn)] = (1/2)(k sn + k sn)
  JacobiElem d_minus = et(pp(Param::k), 1, 0, 0);
  JacobiElem d_plus = et(-pp(Param::k), 1, 0, 0);
  c.push_back((d_minus - d_plus).scaled(sg * gr(1, 2)));
  // (-i mu/2 - 1/4) d ln(dn - sg cn) + (i mu/2 - 1/4) d ln(dn + sg cn),
  // with d ln(dn -+ cn) = (+-1 + cn dn)/sn.
  JacobiElem dln_m = et(pc(1).scaled(sg), -1, 0, 0) + et(pc(1), -1, 1, 1);
  JacobiElem dln_p = et(pc(-1).scaled(sg), -1, 0, 0) + et(pc(1), -1, 1, 1);
  c.push_back(dln_m.scaled(mu1.scaled(gr(-1, 2) * gi()) + pc(-1, 4)) +
              dln_p.scaled(mu1.scaled(gr(1, 2) * gi()) + pc(-1, 4)));
  return c;
}

std::vector<JacobiElem> dlog_elliptic_second(const GaussRat& sg) {
  ParamPoly mu1 = pp(Param::mu);
  ParamPoly mu2 = pp(Param::mu, 2);
  ParamPoly mu3 = pp(Param::mu, 3);
  ParamPoly kp2 = pp(Param::kprime, 2);
  std::vector<JacobiElem> c;
  // d ln(dn + i k sn) = i k cn
  c.push_back(et(pp(Param::k).scaled(sg * gi()), 0, 1, 0));
  // -(1/2) d ln cn + (mu/k') d ln((dn + k' sn)/cn) = sn dn/(2 cn) + mu / cn
  c.push_back(et(pc(1, 2), 1, -1, 1) + et(mu1.scaled(sg), 0, -1, 0));
  // 1/(2^4 k) [(8 i k'^2 mu + i(3 k'^2 + 4 mu^2) sn dn)/(k'^2 cn^2)]
  // plus (1/8) d ln(dn + i k sn)
  JacobiElem r1 =
      et((mu1 * pp(Param::k, -1)).scaled(gi() * gr(1, 2)), 0, -2, 0) +
      et(((kp2.scaled(GaussRat(3)) + mu2.scaled(GaussRat(4))) * pp(Param::k, -1) *
          pp(Param::kprime, -2))
             .scaled(sg * gr(1, 16) * gi()),
         1, -2, 1);
  c.push_back(r1.deriv() + et(pp(Param::k).scaled(sg * gr(1, 8) * gi()), 0, 1, 0));
  // -1/(2^6 k^2) [(k'^2 (12 k'^2 + 32 mu^2) + (38 k'^2 mu + 8 mu^3) sn dn)/(k'^2 cn^4)
  //               + (1 - 2k^2)(3 k'^2 + 4 mu^2)(mu sn dn - 2 k'^2)/(k'^4 cn^2)]
  ParamPoly tk = pc(1) - pp(Param::k, 2).scaled(GaussRat(2));
  ParamPoly band = tk * (kp2.scaled(GaussRat(3)) + mu2.scaled(GaussRat(4)));
  JacobiElem b2 =
      et(kp2.scaled(GaussRat(12)) + mu2.scaled(GaussRat(32)), 0, -4, 0) +
      et((mu1.scaled(GaussRat(38)) + mu3.scaled(GaussRat(8)) * pp(Param::kprime, -2)).scaled(sg),
         1, -4, 1) +
      et((band * mu1 * pp(Param::kprime, -4)).scaled(sg), 1, -2, 1) +
      et((band * pp(Param::kprime, -2)).scaled(GaussRat(-2)), 0, -2, 0);
  c.push_back(b2.scaled(pp(Param::k, -2)).scaled(gr(-1, 64)).deriv());
  return c;
}

}  // namespace

ClosedFormId parse_closed_form(const std::string& name) {
  if (name == "trig-first") return ClosedFormId::trig_first;
  if (name == "trig-second") return ClosedFormId::trig_second;
  if (name == "elliptic-first") return ClosedFormId::elliptic_first;
  if (name == "elliptic-first-compact") return ClosedFormId::elliptic_first_compact;
  if (name == "elliptic-second") return ClosedFormId::elliptic_second;
  throw std::invalid_argument("unknown closed form: " + name);
}

const char* closed_form_name(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::trig_first: return "trig-first";
    case ClosedFormId::trig_second: return "trig-second";
    case ClosedFormId::elliptic_first: return "elliptic-first";
    case ClosedFormId::elliptic_first_compact: return "elliptic-first-compact";
    case ClosedFormId::elliptic_second: return "elliptic-second";
  }
  throw std::logic_error("bad closed form id");
}

ProblemId closed_form_problem(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::trig_first: return ProblemId::mathieu_min0;
    case ClosedFormId::trig_second: return ProblemId::mathieu_minpi2;
    case ClosedFormId::elliptic_first:
    case ClosedFormId::elliptic_first_compact: return ProblemId::lame_z0;
    case ClosedFormId::elliptic_second: return ProblemId::lame_zK;
  }
  throw std::logic_error("bad closed form id");
}

bool closed_form_flip(ClosedFormId id, bool minus_branch) {
  // At the lower trig minimum the plus branch rides the flipped chain; the
  // other forms pair plus with the unflipped one.
  return id == ClosedFormId::trig_first ? !minus_branch : minus_branch;
}

TruncatedSeries<JacobiElem> closed_form_dlog(ClosedFormId id, bool minus_branch) {
  GaussRat sg = minus_branch ? GaussRat(-1) : GaussRat(1);
  std::vector<JacobiElem> c;
  switch (id) {
    case ClosedFormId::trig_first: c = dlog_trig_first(sg); break;
    case ClosedFormId::trig_second: c = dlog_trig_second(sg); break;
    case ClosedFormId::elliptic_first: c = dlog_elliptic_first(sg); break;
    case ClosedFormId::elliptic_first_compact: c = dlog_elliptic_first_compact(sg); break;
    case ClosedFormId::elliptic_second: c = dlog_elliptic_second(sg); break;
  }
  return TruncatedSeries<JacobiElem>::from_coeffs("s", -1, std::move(c), false);
}

TruncatedSeries<JacobiElem> chain_dlog(ProblemId id, bool flip, int max_ell) {
  SmallEnergyProblem pr = small_energy_problem(id, flip);
  std::vector<JacobiElem> chain = small_energy_chain(pr, max_ell);
  TruncatedSeries<JacobiElem> out =
      substitute_small_dispersion(chain, small_spectral_series(id), pr.spectral);
  if (pr.i_prefactor)
    out = out.map_coeffs<JacobiElem>(
        [](int, const JacobiElem& v) { return v.scaled(GaussRat::unit_i()); });
  return out;
}

}  // namespace forge
