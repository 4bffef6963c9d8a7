#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include "forge/param_poly.hpp"
#include "forge/series.hpp"

namespace forge {

// Trigonometric polynomial c_x * x + sum_n (a_n cos(nx) + b_n sin(nx)) with
// ParamPoly coefficients. The secular x term only arises from antiderivatives
// of the constant mode; products involving it are restricted to constant
// cofactors, which is all the exponent assembly ever needs.
class FourierTrigPoly {
 public:
  FourierTrigPoly() = default;

  static FourierTrigPoly constant(ParamPoly c);
  static FourierTrigPoly harmonic(int n, bool sine, ParamPoly c);
  static FourierTrigPoly secular(ParamPoly c);

  bool is_zero() const { return secular_.is_zero() && modes_.empty(); }
  bool is_constant() const;  // no secular part, no n >= 1 modes
  bool has_secular() const { return !secular_.is_zero(); }
  const ParamPoly& secular_coeff() const { return secular_; }
  ParamPoly mode(int n, bool sine) const;
  // Mean over a period, i.e. the secular slope of the antiderivative.
  ParamPoly mean() const { return mode(0, false); }
  int max_mode() const { return modes_.empty() ? 0 : modes_.rbegin()->first; }

  FourierTrigPoly operator-() const;
  FourierTrigPoly operator+(const FourierTrigPoly& o) const;
  FourierTrigPoly operator-(const FourierTrigPoly& o) const;
  FourierTrigPoly operator*(const FourierTrigPoly& o) const;

  FourierTrigPoly scaled(const GaussRat& c) const;
  FourierTrigPoly scaled(const ParamPoly& c) const;

  FourierTrigPoly deriv() const;
  FourierTrigPoly parity_flipped() const;  // x -> -x
  // Constant mode integrates to the secular term; a secular term would need
  // x^2 and throws.
  FourierTrigPoly antiderivative() const;

  std::complex<double> eval(std::complex<double> x, const ParamBindings& b) const;

  bool operator==(const FourierTrigPoly& o) const { return (*this - o).is_zero(); }
  bool operator!=(const FourierTrigPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void add_mode(int n, bool sine, const ParamPoly& c);
  ParamPoly secular_;
  // n -> {cos coefficient, sin coefficient}; n = 0 uses only the cos slot.
  std::map<int, std::array<ParamPoly, 2>> modes_;
};

inline FourierTrigPoly coeff_scale(const FourierTrigPoly& f, const GaussRat& s) {
  return f.scaled(s);
}
template <>
inline FourierTrigPoly unit_one<FourierTrigPoly>() {
  return FourierTrigPoly::constant(ParamPoly::constant(1));
}

}  // namespace forge
