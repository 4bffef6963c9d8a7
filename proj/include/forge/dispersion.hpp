#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/fourier_ring.hpp"
#include "forge/jacobi_ring.hpp"
#include "forge/param_poly.hpp"
#include "forge/riccati.hpp"
#include "forge/series.hpp"
#include "forge/weierstrass_ring.hpp"

namespace forge {

inline GaussRat unit_i_pow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0:
      return GaussRat(1);
    case 1:
      return GaussRat::unit_i();
    case 2:
      return GaussRat(-1);
    default:
      return -GaussRat::unit_i();
  }
}

// Secular (x-linear) part of an exponent coefficient.
inline ParamPoly secular_part(const FourierTrigPoly& f) { return f.secular_coeff(); }
inline ParamPoly secular_part(const WeierstrassElem& w) { return w.x_part(); }

// Ring constants for promoting ParamPoly series into a function ring.
inline FourierTrigPoly ring_constant(const ParamPoly& c, const FourierTrigPoly&) {
  return FourierTrigPoly::constant(c);
}
inline WeierstrassElem ring_constant(const ParamPoly& c, const WeierstrassElem&) {
  return WeierstrassElem::constant(c);
}

inline FourierTrigPoly coeff_invert_unit(const FourierTrigPoly& f) {
  if (!f.is_constant()) throw std::domain_error("inverse of non-constant element");
  return FourierTrigPoly::constant(f.mean().unit_inverse());
}
inline WeierstrassElem coeff_invert_unit(const WeierstrassElem& w) {
  if (!w.is_constant()) throw std::domain_error("inverse of non-constant element");
  return WeierstrassElem::constant(w.constant_part().unit_inverse());
}

// i*nu as a Laurent series in t = lambda^{-1/2}: t^{-1} + sum <v_l> t^l,
// from the per-period means of the density chain [v_1 .. v_N].
template <class E>
TruncatedSeries<ParamPoly> floquet_exponent_series(const std::vector<E>& chain) {
  std::vector<ParamPoly> c;
  c.reserve(chain.size() + 2);
  c.push_back(ParamPoly::constant(1));
  c.push_back(ParamPoly());
  for (const auto& v : chain) c.push_back(v.mean());
  return TruncatedSeries<ParamPoly>::from_coeffs("t", -1, c, false);
}

// sqrt(lambda) as a series in r = 1/nu (lead -1, top coefficient i), from the
// reversion of i*nu(t) evaluated on the branch continuous with the free case.
TruncatedSeries<ParamPoly> sqrt_lambda_of_nu(const TruncatedSeries<ParamPoly>& i_nu_of_t);

// lambda(nu) in r = 1/nu, lead -2, leading coefficient exactly -1.
TruncatedSeries<ParamPoly> lambda_of_nu(const TruncatedSeries<ParamPoly>& sqrt_lambda);

template <class E>
TruncatedSeries<ParamPoly> dispersion_from_periods(const std::vector<E>& chain) {
  return lambda_of_nu(sqrt_lambda_of_nu(floquet_exponent_series(chain)));
}

// Exponent of the wave function in t: x t^{-1} + sum (integral of v_l) t^l.
template <class E>
TruncatedSeries<E> wavefunction_exponent(const std::vector<E>& chain, bool minus_branch = false) {
  std::vector<E> c;
  c.reserve(chain.size() + 2);
  E x_unit = unit_one<E>().antiderivative();
  c.push_back(minus_branch ? -x_unit : x_unit);
  c.push_back(E());
  GaussRat sign(1);
  for (const auto& v : chain) {
    sign = minus_branch ? -sign : sign;
    c.push_back(v.scaled(sign).antiderivative());
  }
  return TruncatedSeries<E>::from_coeffs("t", -1, c, false);
}

// Substitutes t = 1/sqrt_lambda(nu) and regroups in r = 1/nu. Every
// coefficient at r^e, e >= 0, must come out free of secular parts; a residue
// signals an inconsistent dispersion and throws.
template <class E>
TruncatedSeries<E> refloquet_wavefunction(const TruncatedSeries<E>& exponent,
                                          const TruncatedSeries<ParamPoly>& sqrt_lambda) {
  TruncatedSeries<ParamPoly> t_of_nu = series_inverse(sqrt_lambda);
  TruncatedSeries<E> inner = t_of_nu.template map_coeffs<E>(
      [](int, const ParamPoly& c) { return ring_constant(c, E()); });
  TruncatedSeries<E> phi = series_compose(exponent, inner);
  for (int e = 0; e < phi.order(); ++e)
    if (!secular_part(phi.coeff(e)).is_zero())
      throw std::runtime_error("secular residue at order " + std::to_string(e));
  return phi;
}

// Tabulated strong-coupling dispersion data: the spectral series
// (delta, Lambda or Lambda~) in s = 1/g with g^2 the large coupling,
// lead -1, four known orders, Floquet symbol nu or mu.
TruncatedSeries<ParamPoly> small_spectral_series(ProblemId id);

// Full eigenvalue series in s for the oracle comparisons: the spectral data
// plus the potential offset at the expansion point.
TruncatedSeries<ParamPoly> small_lambda_series(ProblemId id);

// Replaces the spectral parameter in a density chain by its tabulated
// series and regroups as a series in s = 1/g; output coefficients carry the
// Floquet parameter inside ParamPoly. The window is clipped where unknown
// chain orders could first reach (spectral degree of v_l grows as ceil(l/2)).
TruncatedSeries<JacobiElem> substitute_small_dispersion(
    const std::vector<JacobiElem>& chain, const TruncatedSeries<ParamPoly>& spectral_series,
    Param spectral);

// Numeric evaluation of a ParamPoly series at symbol value x.
std::complex<double> series_eval(const TruncatedSeries<ParamPoly>& s, const ParamBindings& b,
                                 std::complex<double> x);

}  // namespace forge
