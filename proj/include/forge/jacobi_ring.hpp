#pragma once

#include <complex>
#include <map>
#include <string>
#include <tuple>

#include "forge/param_poly.hpp"
#include "forge/series.hpp"

namespace forge {

// sn^p cn^q dn^e monomial key; p, q are Laurent exponents, e is 0 or 1
// after reduction by dn^2 = 1 - k^2 sn^2 and cn^2 = 1 - sn^2.
struct JacKey {
  int p = 0, q = 0, e = 0;
  bool operator<(const JacKey& o) const { return std::tie(p, q, e) < std::tie(o.p, o.q, o.e); }
  bool operator==(const JacKey& o) const { return p == o.p && q == o.q && e == o.e; }
};

// Laurent combination of Jacobi elliptic monomials over ParamPoly. In trig
// mode (k = 0) sn, cn degenerate to sin, cos and dn to 1; elements of the
// two modes never mix. Canonical storage keeps cn exponents in {0, 1} or
// negative and the dn flag in {0, 1}; the zero test clears negative cn
// powers by an even unit shift, making equality complete modulo the curve
// relations.
class JacobiElem {
 public:
  JacobiElem() = default;
  explicit JacobiElem(bool trig) : trig_(trig) {}

  static JacobiElem constant(ParamPoly c, bool trig);
  static JacobiElem term(ParamPoly c, int sn_exp, int cn_exp, int dn_exp, bool trig);

  bool trig_mode() const { return trig_; }
  bool is_zero() const;
  bool is_single_term() const { return terms_.size() == 1; }
  bool is_constant() const;
  ParamPoly constant_part() const;  // coefficient of the (0,0,0) monomial

  JacobiElem operator-() const;
  JacobiElem operator+(const JacobiElem& o) const;
  JacobiElem operator-(const JacobiElem& o) const;
  JacobiElem operator*(const JacobiElem& o) const;

  JacobiElem scaled(const GaussRat& c) const;
  JacobiElem scaled(const ParamPoly& c) const;

  // d/dx with sn' = cn dn, cn' = -sn dn, dn' = -k^2 sn cn (trig: sin/cos).
  JacobiElem deriv() const;

  // Exact division by a one-term divisor without a dn factor.
  JacobiElem divided_by_term(const JacobiElem& d) const;

  JacobiElem parity_flipped() const;  // x -> -x

  std::complex<double> eval(std::complex<double> sn, std::complex<double> cn,
                            std::complex<double> dn, const ParamBindings& b) const;

  bool operator==(const JacobiElem& o) const { return (*this - o).is_zero(); }
  bool operator!=(const JacobiElem& o) const { return !(*this == o); }

  const std::map<JacKey, ParamPoly>& terms() const { return terms_; }
  std::string to_string() const;

 private:
  void add_term(int p, int q, int d, const ParamPoly& c);
  void check_mode(const JacobiElem& o) const;
  bool trig_ = false;
  std::map<JacKey, ParamPoly> terms_;
};

inline JacobiElem coeff_scale(const JacobiElem& j, const GaussRat& s) { return j.scaled(s); }

}  // namespace forge
