#pragma once

#include <complex>
#include <map>
#include <string>

#include "forge/params.hpp"
#include "forge/rational.hpp"

namespace forge {

// Bindings for numeric evaluation, indexed by Param.
using ParamBindings = std::map<Param, std::complex<double>>;

// Laurent polynomial in the formal parameters with Gaussian-rational
// coefficients. Canonical form: no zero coefficients, and the kprime
// exponent is at most 1 (k'^2 is rewritten to 1 - k^2 on insertion;
// negative kprime powers are kept as-is).
class ParamPoly {
 public:
  ParamPoly() = default;

  static ParamPoly constant(GaussRat c);
  static ParamPoly constant(long num, long den = 1) { return constant(GaussRat(rat(num, den))); }
  static ParamPoly param(Param p, int exp = 1);
  static ParamPoly monomial(GaussRat c, const ExpVec& e);

  // Complete zero test modulo k'^2 = 1 - k^2: negative k' exponents are
  // cleared by an even k' shift (a unit) before comparing, since insertion
  // already reduces all even nonnegative k' powers.
  bool is_zero() const;
  bool is_constant() const;
  GaussRat constant_value() const;  // requires is_constant()

  // Single term c * monomial; such elements are the units of the ring.
  bool is_unit_monomial() const;
  ParamPoly unit_inverse() const;  // requires is_unit_monomial()

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly& operator+=(const ParamPoly& o);

  ParamPoly scaled(const GaussRat& c) const;
  ParamPoly pow(int e) const;  // e >= 0, or e < 0 for unit monomials

  bool operator==(const ParamPoly& o) const {
    return terms_ == o.terms_ || (*this - o).is_zero();
  }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  bool contains(Param p) const;
  int max_exponent(Param p) const;

  // Splits into powers of p: result[e] has p removed and satisfies
  // sum_e result[e] * p^e == *this. Used to substitute a series for p.
  std::map<int, ParamPoly> decompose(Param p) const;

  // All bound parameters substituted numerically; throws if a parameter
  // appearing in a term has no binding.
  std::complex<double> eval(const ParamBindings& b) const;

  std::string to_string() const;

  const std::map<ExpVec, GaussRat>& terms() const { return terms_; }

 private:
  void add_term(const ExpVec& e, const GaussRat& c);
  std::map<ExpVec, GaussRat> terms_;
};

inline ParamPoly operator*(const GaussRat& c, const ParamPoly& p) { return p.scaled(c); }

// Fills kprime = sqrt(1 - k^2) (principal) when k is bound and kprime is not.
ParamBindings with_derived_params(ParamBindings b);

}  // namespace forge
