#include "forge/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace forge {

namespace {

ParamPoly c_rat(long num, long den) { return ParamPoly::constant(num, den); }

ParamPoly pw(Param p, int e) { return ParamPoly::param(p, e); }

}  // namespace

TruncatedSeries<ParamPoly> sqrt_lambda_of_nu(const TruncatedSeries<ParamPoly>& i_nu_of_t) {
  // i*nu(t) = t^{-1} + sum <v_l> t^l is s + sum <v_l> s^{-l} in s = sqrt(lambda),
  // so the reversion gives sqrt(lambda) = sum_e b_e (i nu)^{-e}.
  TruncatedSeries<ParamPoly> b = series_revert(i_nu_of_t, "r");
  return b.map_coeffs<ParamPoly>(
      [](int e, const ParamPoly& c) { return c.scaled(unit_i_pow(-e)); });
}

TruncatedSeries<ParamPoly> lambda_of_nu(const TruncatedSeries<ParamPoly>& sqrt_lambda) {
  TruncatedSeries<ParamPoly> lam = series_mul(sqrt_lambda, sqrt_lambda);
  if (lam.lead() != -2 || lam.coeff(-2) != ParamPoly::constant(-1))
    throw std::logic_error("eigenvalue series must start as -nu^2");
  return lam;
}

TruncatedSeries<ParamPoly> small_spectral_series(ProblemId id) {
  std::vector<ParamPoly> c;
  switch (id) {
    case ProblemId::mathieu_min0: {
      // delta(nu) = 4 nu g - (4nu^2-1)/2^3 - (4nu^3-3nu)/(2^6 g) - (80nu^4-136nu^2+9)/(2^12 g^2)
      c.push_back(pw(Param::nu, 1).scaled(GaussRat(4)));
      c.push_back(pw(Param::nu, 2).scaled(GaussRat(rat(-1, 2))) + c_rat(1, 8));
      c.push_back(pw(Param::nu, 3).scaled(GaussRat(rat(-1, 16))) +
                  pw(Param::nu, 1).scaled(GaussRat(rat(3, 64))));
      c.push_back(pw(Param::nu, 4).scaled(GaussRat(rat(-5, 256))) +
                  pw(Param::nu, 2).scaled(GaussRat(rat(17, 512))) + c_rat(-9, 4096));
      break;
    }
    case ProblemId::mathieu_minpi2: {
      // delta(nu) = -4 nu g + (4nu^2+1)/2^3 + (4nu^3+3nu)/(2^6 g) + (80nu^4+136nu^2+9)/(2^12 g^2)
      c.push_back(pw(Param::nu, 1).scaled(GaussRat(-4)));
      c.push_back(pw(Param::nu, 2).scaled(GaussRat(rat(1, 2))) + c_rat(1, 8));
      c.push_back(pw(Param::nu, 3).scaled(GaussRat(rat(1, 16))) +
                  pw(Param::nu, 1).scaled(GaussRat(rat(3, 64))));
      c.push_back(pw(Param::nu, 4).scaled(GaussRat(rat(5, 256))) +
                  pw(Param::nu, 2).scaled(GaussRat(rat(17, 512))) + c_rat(9, 4096));
      break;
    }
    case ProblemId::lame_z0: {
      ParamPoly mu1 = pw(Param::mu, 1);
      ParamPoly mu2 = pw(Param::mu, 2);
      ParamPoly mu3 = pw(Param::mu, 3);
      ParamPoly mu4 = pw(Param::mu, 4);
      ParamPoly k2 = pw(Param::k, 2);
      ParamPoly op = c_rat(1, 1) + k2;   // 1 + k^2
      ParamPoly om = c_rat(1, 1) - k2;   // 1 - k^2
      // -2 i k mu g
      c.push_back(pw(Param::k, 1) * mu1.scaled(GaussRat(-2) * GaussRat::unit_i()));
      // -(1+k^2)(4mu^2-1)/2^3
      c.push_back((op * (mu2.scaled(GaussRat(4)) + c_rat(-1, 1))).scaled(GaussRat(rat(-1, 8))));
      // -(i/2^5 k) [(1+k^2)^2 (4mu^3-3mu) - 4k^2 (4mu^3-5mu)]
      c.push_back((pw(Param::k, -1) *
                   (op * op * (mu3.scaled(GaussRat(4)) - mu1.scaled(GaussRat(3))) -
                    k2.scaled(GaussRat(4)) * (mu3.scaled(GaussRat(4)) - mu1.scaled(GaussRat(5)))))
                      .scaled(GaussRat(rat(-1, 32)) * GaussRat::unit_i()));
      // (1+k^2)(1-k^2)^2 (80mu^4-136mu^2+9) / (2^10 k^2)
      c.push_back((pw(Param::k, -2) * op * om * om *
                   (mu4.scaled(GaussRat(80)) - mu2.scaled(GaussRat(136)) + c_rat(9, 1)))
                      .scaled(GaussRat(rat(1, 1024))));
      break;
    }
    case ProblemId::lame_zK: {
      ParamPoly mu1 = pw(Param::mu, 1);
      ParamPoly mu2 = pw(Param::mu, 2);
      ParamPoly mu3 = pw(Param::mu, 3);
      ParamPoly mu4 = pw(Param::mu, 4);
      ParamPoly tk = c_rat(1, 1) - pw(Param::k, 2).scaled(GaussRat(2));  // 1 - 2k^2
      // 2 i k mu g
      c.push_back(pw(Param::k, 1) * mu1.scaled(GaussRat(2) * GaussRat::unit_i()));
      // (1-2k^2)(4mu^2/k'^2 + 1)/2^3
      c.push_back(
          (tk * (mu2 * pw(Param::kprime, -2).scaled(GaussRat(4)) + c_rat(1, 1)))
              .scaled(GaussRat(rat(1, 8))));
      // (i/2^5 k) [(1-2k^2)^2 (4mu^3/k'^4 + 3mu/k'^2) + 4k^2 (4mu^3/k'^2 + 5mu)]
      c.push_back(
          (pw(Param::k, -1) *
           (tk * tk *
                (mu3 * pw(Param::kprime, -4).scaled(GaussRat(4)) +
                 mu1 * pw(Param::kprime, -2).scaled(GaussRat(3))) +
            pw(Param::k, 2).scaled(GaussRat(4)) *
                (mu3 * pw(Param::kprime, -2).scaled(GaussRat(4)) + mu1.scaled(GaussRat(5)))))
              .scaled(GaussRat(rat(1, 32)) * GaussRat::unit_i()));
      // -(1-2k^2)(80mu^4/k'^6 + 136mu^2/k'^4 + 9/k'^2) / (2^10 k^2)
      c.push_back((pw(Param::k, -2) * tk *
                   (mu4 * pw(Param::kprime, -6).scaled(GaussRat(80)) +
                    mu2 * pw(Param::kprime, -4).scaled(GaussRat(136)) +
                    pw(Param::kprime, -2).scaled(GaussRat(9))))
                      .scaled(GaussRat(rat(-1, 1024))));
      break;
    }
    default:
      throw std::invalid_argument("no small-energy dispersion data for this problem");
  }
  return TruncatedSeries<ParamPoly>::from_coeffs("s", -1, std::move(c), false);
}

TruncatedSeries<ParamPoly> small_lambda_series(ProblemId id) {
  TruncatedSeries<ParamPoly> spec = small_spectral_series(id);
  switch (id) {
    case ProblemId::mathieu_min0:
      return series_add(TruncatedSeries<ParamPoly>::monomial("s", -2, c_rat(-2, 1)), spec);
    case ProblemId::mathieu_minpi2:
      return series_add(TruncatedSeries<ParamPoly>::monomial("s", -2, c_rat(2, 1)), spec);
    case ProblemId::lame_z0:
      return spec;
    case ProblemId::lame_zK:
      return series_add(
          TruncatedSeries<ParamPoly>::monomial("s", -2, -ParamPoly::param(Param::k, 2)), spec);
    default:
      throw std::invalid_argument("no small-energy dispersion data for this problem");
  }
}

TruncatedSeries<JacobiElem> substitute_small_dispersion(
    const std::vector<JacobiElem>& chain, const TruncatedSeries<ParamPoly>& spectral_series,
    Param spectral) {
  if (chain.size() < 2)
    throw std::invalid_argument("substitution needs the chain from v_{-1} upward");
  if (spectral_series.lead() != -1)
    throw std::invalid_argument("spectral series must have lead exponent -1");
  const int L = static_cast<int>(chain.size()) - 2;
  const std::string& sym = spectral_series.symbol();

  // v_l sits at s^l and is polynomial in the spectral symbol.
  std::vector<std::map<int, JacobiElem>> split;
  split.reserve(chain.size());
  for (const auto& v : chain) {
    std::map<int, JacobiElem> parts;
    for (const auto& [key, poly] : v.terms())
      for (const auto& [d, rest] : poly.decompose(spectral))
        parts[d] = parts[d] + JacobiElem::term(rest, key.p, key.q, key.e, v.trig_mode());
    split.push_back(std::move(parts));
  }

  std::vector<TruncatedSeries<ParamPoly>> powers;
  powers.push_back(TruncatedSeries<ParamPoly>::monomial(sym, 0, ParamPoly::constant(1)));
  auto power = [&](int d) -> const TruncatedSeries<ParamPoly>& {
    while (static_cast<int>(powers.size()) <= d)
      powers.push_back(series_mul(powers.back(), spectral_series));
    return powers[static_cast<size_t>(d)];
  };

  // The first order the unknown tail v_{L+1} can reach after substitution;
  // the substituted data's own horizon can only tighten it.
  int window = (L + 1) / 2;
  for (size_t j = 0; j < split.size(); ++j) {
    int ell = static_cast<int>(j) - 1;
    for (const auto& [d, part] : split[j])
      if (d >= 1 && !part.is_zero()) window = std::min(window, ell + power(d).order());
  }
  if (window < -1) window = -1;

  std::vector<JacobiElem> out(static_cast<size_t>(window + 1));
  for (size_t j = 0; j < split.size(); ++j) {
    int ell = static_cast<int>(j) - 1;
    for (const auto& [d, part] : split[j]) {
      const TruncatedSeries<ParamPoly>& p = power(d);
      int top = std::min(p.order(), window - ell);
      for (int e = p.lead(); e < top; ++e) {
        size_t idx = static_cast<size_t>(ell + e + 1);
        out[idx] = out[idx] + part.scaled(p.coeff(e));
      }
    }
  }
  return TruncatedSeries<JacobiElem>::from_coeffs(sym, -1, std::move(out), false);
}

std::complex<double> series_eval(const TruncatedSeries<ParamPoly>& s, const ParamBindings& b,
                                 std::complex<double> x) {
  ParamBindings bb = with_derived_params(b);
  std::complex<double> acc = 0.0;
  for (int e = s.lead(); e < s.order(); ++e) {
    const ParamPoly c = s.coeff(e);
    if (c.is_zero()) continue;
    acc += c.eval(bb) * std::pow(x, e);
  }
  return acc;
}

}  // namespace forge
