#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace forge {

// mpq_class stays canonical (reduced, positive denominator) through gmpxx.
inline std::string rat_to_string(const mpq_class& r) { return r.get_str(); }

inline double rat_to_double(const mpq_class& r) { return r.get_d(); }

inline mpq_class rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

// Gaussian rational re + im*i. i is a formal element with i*i = -1, so the
// ring stays exact; division goes through the conjugate.
struct GaussRat {
  mpq_class re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long v) : re(v), im(0) {}  // NOLINT: implicit by design
  GaussRat(const mpq_class& r) : re(r), im(0) {}
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat make(long rn, long rd, long in_ = 0, long id = 1) {
    return GaussRat(rat(rn, rd), rat(in_, id));
  }
  static GaussRat unit_i() { return GaussRat(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussRat operator/(const GaussRat& o) const {
    mpq_class n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("division by zero Gaussian rational");
    return GaussRat((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
  }
  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  GaussRat conj() const { return GaussRat(re, -im); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  // "p/q", "r/s*i", or "p/q+r/s*i" (denominator omitted when 1).
  std::string to_string() const {
    if (im == 0) return rat_to_string(re);
    std::string it = (im == 1) ? "i" : (im == -1 ? "-i" : rat_to_string(im) + "*i");
    if (re == 0) return it;
    if (im > 0) return rat_to_string(re) + "+" + it;
    return rat_to_string(re) + "-" + (im == -1 ? "i" : rat_to_string(-im) + "*i");
  }
};

inline GaussRat operator*(const mpq_class& s, const GaussRat& g) { return GaussRat(s) * g; }

}  // namespace forge
