#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "forge/param_poly.hpp"
#include "forge/series.hpp"

namespace forge {

// Numeric data of one point for evaluation: x, zeta~(x), and the derivatives
// [p~(x), p~'(x), ...] up to the highest order the element carries.
struct WeierstrassPoint {
  std::complex<double> x;
  std::complex<double> zeta;
  std::vector<std::complex<double>> p_derivs;
};

// Linear combination of {1, x, zeta~, d^k p~} over ParamPoly, where
// p~ = p + zeta1 and zeta~' = -p~. Derivatives stay in the basis; products
// are defined on the {1, d^k p~} subring, where p'^2 = 4p^3 - g2 p - g3
// folds everything back to linear combinations of derivatives of p.
// zeta~ and d^k p~ have period 2*omega1 on the real axis, so the mean over
// a period is the coefficient of 1 and the only secular piece is x.
class WeierstrassElem {
 public:
  WeierstrassElem() = default;

  static WeierstrassElem constant(ParamPoly c);
  static WeierstrassElem x_term(ParamPoly c);
  static WeierstrassElem zeta_term(ParamPoly c);
  static WeierstrassElem p_term(ParamPoly c, int k = 0);  // coefficient of d^k p~

  bool is_zero() const;
  bool is_constant() const;
  ParamPoly constant_part() const { return one_; }
  ParamPoly x_part() const { return x_; }
  ParamPoly zeta_part() const { return zeta_; }
  ParamPoly p_part(int k) const;
  int max_deriv() const;  // highest k present, -1 if none

  ParamPoly mean() const { return one_; }

  WeierstrassElem operator-() const;
  WeierstrassElem operator+(const WeierstrassElem& o) const;
  WeierstrassElem operator-(const WeierstrassElem& o) const;
  WeierstrassElem operator*(const WeierstrassElem& o) const;

  WeierstrassElem scaled(const GaussRat& c) const;
  WeierstrassElem scaled(const ParamPoly& c) const;

  WeierstrassElem deriv() const;
  // Primitive within the ring: 1 -> x, p~ -> -zeta~, d^k p~ -> d^(k-1) p~.
  // Throws if an x or zeta~ part is present (their primitives leave the basis).
  WeierstrassElem antiderivative() const;

  WeierstrassElem parity_flipped() const;  // x -> -x

  std::complex<double> eval(const WeierstrassPoint& pt, const ParamBindings& b) const;

  bool operator==(const WeierstrassElem& o) const { return (*this - o).is_zero(); }
  bool operator!=(const WeierstrassElem& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void prune();
  ParamPoly one_;
  ParamPoly x_;
  ParamPoly zeta_;
  std::map<int, ParamPoly> p_;  // k -> coefficient of d^k p~
};

inline WeierstrassElem coeff_scale(const WeierstrassElem& w, const GaussRat& s) {
  return w.scaled(s);
}

template <>
inline WeierstrassElem unit_one<WeierstrassElem>() {
  return WeierstrassElem::constant(ParamPoly::constant(1));
}

}  // namespace forge
