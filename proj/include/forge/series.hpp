#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/param_poly.hpp"
#include "forge/rational.hpp"

namespace forge {

// Unit inversion for coefficient types that support it (series inverse,
// sqrt normalization and reversion need it; ring-valued series do not).
inline GaussRat coeff_invert_unit(const GaussRat& c) { return GaussRat(1) / c; }
inline ParamPoly coeff_invert_unit(const ParamPoly& p) { return p.unit_inverse(); }
inline GaussRat coeff_scale(const GaussRat& c, const GaussRat& s) { return c * s; }
inline ParamPoly coeff_scale(const ParamPoly& p, const GaussRat& s) { return p.scaled(s); }

template <class C>
C unit_one();
template <>
inline GaussRat unit_one<GaussRat>() { return GaussRat(1); }
template <>
inline ParamPoly unit_one<ParamPoly>() { return ParamPoly::constant(1); }

// Formal series sum_{e=lead}^{order-1} c[e-lead] * symbol^e + O(symbol^order).
// `exact` marks finite Laurent polynomials (no truncation error); arithmetic
// propagates the pessimistic truncation window otherwise. Coefficients are
// exact ring elements; default-constructed C is zero.
template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries() : symbol_("x"), lead_(0), order_(0), exact_(true) {}

  static TruncatedSeries zero(std::string symbol) {
    TruncatedSeries s;
    s.symbol_ = std::move(symbol);
    return s;
  }
  static TruncatedSeries zero_to_order(std::string symbol, int order) {
    TruncatedSeries s;
    s.symbol_ = std::move(symbol);
    s.lead_ = s.order_ = order;
    s.exact_ = false;
    return s;
  }
  // Exact single term c * symbol^e.
  static TruncatedSeries monomial(std::string symbol, int e, C c) {
    TruncatedSeries s;
    s.symbol_ = std::move(symbol);
    s.lead_ = e;
    s.order_ = e + 1;
    s.exact_ = true;
    s.c_.push_back(std::move(c));
    s.normalize();
    return s;
  }
  static TruncatedSeries from_coeffs(std::string symbol, int lead, std::vector<C> coeffs,
                                     bool exact = false) {
    TruncatedSeries s;
    s.symbol_ = std::move(symbol);
    s.lead_ = lead;
    s.order_ = lead + static_cast<int>(coeffs.size());
    s.exact_ = exact;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
  }

  const std::string& symbol() const { return symbol_; }
  int lead() const { return lead_; }
  int order() const { return order_; }
  bool exact() const { return exact_; }
  bool is_zero() const { return c_.empty(); }
  int known_terms() const { return static_cast<int>(c_.size()); }

  // Coefficient of symbol^e; zero below the lead and above an exact tail,
  // error past the truncation horizon.
  C coeff(int e) const {
    if (e < lead_) return C{};
    if (e >= order_) {
      if (exact_) return C{};
      throw std::out_of_range("series coefficient past truncation order");
    }
    return c_[static_cast<size_t>(e - lead_)];
  }

  // Imposes a truncation horizon: the result is never exact. Exact inputs
  // may be padded upward (their tail really is zero); truncated inputs can
  // only shrink.
  TruncatedSeries truncated(int new_order) const {
    TruncatedSeries r = *this;
    if (exact_ && new_order > r.order_) {
      if (r.c_.empty()) {
        r.lead_ = new_order;
        r.order_ = new_order;
      } else {
        r.c_.resize(static_cast<size_t>(new_order - r.lead_));
        r.order_ = new_order;
      }
    } else if (new_order < r.order_) {
      if (new_order < r.lead_) {
        r.c_.clear();
        r.lead_ = r.order_ = new_order;
      } else {
        r.order_ = new_order;
        r.c_.resize(static_cast<size_t>(r.order_ - r.lead_));
      }
    }
    r.exact_ = false;
    r.normalize();
    return r;
  }

  TruncatedSeries shifted(int k) const {  // multiply by symbol^k
    TruncatedSeries r = *this;
    r.lead_ += k;
    r.order_ += k;
    return r;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  TruncatedSeries scaled(const GaussRat& s) const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c = coeff_scale(c, s);
    r.normalize();
    return r;
  }
  // Multiply every coefficient by a ring element.
  TruncatedSeries coeff_multiplied(const C& m) const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c = c * m;
    r.normalize();
    return r;
  }

  TruncatedSeries renamed(std::string new_symbol) const {
    TruncatedSeries r = *this;
    r.symbol_ = std::move(new_symbol);
    return r;
  }

  template <class D>
  TruncatedSeries<D> map_coeffs(const std::function<D(int, const C&)>& f) const {
    std::vector<D> out;
    out.reserve(c_.size());
    for (int e = lead_; e < order_; ++e) out.push_back(f(e, c_[static_cast<size_t>(e - lead_)]));
    return TruncatedSeries<D>::from_coeffs(symbol_, lead_, std::move(out), exact_);
  }

  bool operator==(const TruncatedSeries& o) const {
    return symbol_ == o.symbol_ && lead_ == o.lead_ && order_ == o.order_ && exact_ == o.exact_ &&
           c_ == o.c_;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.front().is_zero()) {
      c_.erase(c_.begin());
      ++lead_;
    }
    if (exact_) {
      while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
        --order_;
      }
      if (c_.empty()) lead_ = order_ = 0;
    } else if (c_.empty()) {
      lead_ = order_;
    }
  }

  std::string symbol_;
  int lead_, order_;
  bool exact_;
  std::vector<C> c_;
};

template <class C>
TruncatedSeries<C> series_add(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  if (a.symbol() != b.symbol()) throw std::invalid_argument("series symbol mismatch in add");
  if (a.is_zero() && a.exact()) return b;
  if (b.is_zero() && b.exact()) return a;
  bool exact = a.exact() && b.exact();
  int order;
  if (exact) {
    order = std::max(a.order(), b.order());
  } else if (a.exact()) {
    order = b.order();
  } else if (b.exact()) {
    order = a.order();
  } else {
    order = std::min(a.order(), b.order());
  }
  int lead = std::min(std::min(a.lead(), b.lead()), order);
  std::vector<C> c;
  c.reserve(static_cast<size_t>(order - lead));
  for (int e = lead; e < order; ++e) {
    C x{};
    if (e >= a.lead() && (e < a.order() || a.exact())) x = x + a.coeff(e);
    if (e >= b.lead() && (e < b.order() || b.exact())) x = x + b.coeff(e);
    c.push_back(std::move(x));
  }
  return TruncatedSeries<C>::from_coeffs(a.symbol(), lead, std::move(c), exact);
}

template <class C>
TruncatedSeries<C> series_sub(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  return series_add(a, -b);
}

// Cauchy product. Truncation is pessimistic: with horizons Na, Nb and leads
// la, lb the product is known below min(Na + lb, Nb + la).
template <class C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  if (a.symbol() != b.symbol()) throw std::invalid_argument("series symbol mismatch in mul");
  if ((a.is_zero() && a.exact()) || (b.is_zero() && b.exact()))
    return TruncatedSeries<C>::zero(a.symbol());
  bool exact = a.exact() && b.exact();
  int lead = a.lead() + b.lead();
  int order;
  if (exact) {
    order = (a.order() - 1) + (b.order() - 1) + 1;
  } else {
    const int kBig = 1 << 28;
    int n1 = a.exact() ? kBig : a.order() + b.lead();
    int n2 = b.exact() ? kBig : b.order() + a.lead();
    order = std::min(n1, n2);
  }
  if (a.is_zero() || b.is_zero()) return TruncatedSeries<C>::zero_to_order(a.symbol(), order);
  std::vector<C> c(static_cast<size_t>(std::max(order - lead, 0)));
  for (int i = a.lead(); i < a.order(); ++i) {
    const C ai = a.coeff(i);
    if (ai.is_zero()) continue;
    for (int j = b.lead(); j < b.order() && i + j < order; ++j) {
      const C bj = b.coeff(j);
      if (bj.is_zero()) continue;
      size_t idx = static_cast<size_t>(i + j - lead);
      c[idx] = c[idx] + ai * bj;
    }
  }
  return TruncatedSeries<C>::from_coeffs(a.symbol(), lead, std::move(c), exact);
}

template <class C>
TruncatedSeries<C> series_pow(const TruncatedSeries<C>& a, int e) {
  if (e < 0) throw std::invalid_argument("series_pow needs a nonnegative exponent");
  TruncatedSeries<C> r = TruncatedSeries<C>::monomial(a.symbol(), 0, unit_one<C>());
  for (int j = 0; j < e; ++j) r = series_mul(r, a);
  return r;
}

// Multiplicative inverse; needs an invertible leading coefficient. For exact
// inputs the result is an infinite series, so a target term count is required.
template <class C>
TruncatedSeries<C> series_inverse(const TruncatedSeries<C>& a, int target_terms = -1) {
  if (a.is_zero()) throw std::domain_error("inverse of zero series");
  int terms = a.exact() ? target_terms : a.order() - a.lead();
  if (terms <= 0)
    throw std::invalid_argument("series_inverse of exact series needs a target term count");
  C c0inv = coeff_invert_unit(a.coeff(a.lead()));
  TruncatedSeries<C> one = TruncatedSeries<C>::monomial(a.symbol(), 0, unit_one<C>());
  // a = c0 x^L (1 + e); invert 1 + e by Neumann accumulation (e has lead >= 1).
  TruncatedSeries<C> e =
      series_sub(a.shifted(-a.lead()).coeff_multiplied(c0inv), one).truncated(terms);
  TruncatedSeries<C> epow = one;
  TruncatedSeries<C> acc = TruncatedSeries<C>::zero_to_order(a.symbol(), terms);
  for (int j = 0; j < terms; ++j) {
    acc = series_add(acc, (j % 2) ? -epow : epow);
    if (j + 1 < terms) epow = series_mul(epow, e).truncated(terms);
  }
  return acc.coeff_multiplied(c0inv).shifted(-a.lead());
}

// Square root with caller-supplied branch for the leading coefficient
// (branch * branch must equal it). Newton iteration on the inverse square
// root keeps everything division-free above the rational scalars.
template <class C>
TruncatedSeries<C> series_sqrt(const TruncatedSeries<C>& a, const C& branch,
                               int target_terms = -1) {
  if (a.is_zero()) throw std::domain_error("sqrt of zero series");
  if (a.lead() % 2 != 0) throw std::domain_error("sqrt needs an even leading exponent");
  if (!(branch * branch == a.coeff(a.lead())))
    throw std::invalid_argument("sqrt branch does not square to the leading coefficient");
  int terms = a.exact() ? target_terms : a.order() - a.lead();
  if (terms <= 0)
    throw std::invalid_argument("series_sqrt of exact series needs a target term count");
  C c0inv = coeff_invert_unit(a.coeff(a.lead()));
  TruncatedSeries<C> one = TruncatedSeries<C>::monomial(a.symbol(), 0, unit_one<C>());
  TruncatedSeries<C> u = a.shifted(-a.lead()).coeff_multiplied(c0inv).truncated(terms);  // 1 + e
  TruncatedSeries<C> z = one.truncated(terms);
  GaussRat half = GaussRat(rat(1, 2));
  for (int correct = 1; correct < terms; correct *= 2) {
    // z <- z + z (1 - u z^2) / 2 doubles the number of correct terms.
    TruncatedSeries<C> r = series_sub(one, series_mul(u, series_mul(z, z)).truncated(terms));
    z = series_add(z, series_mul(z, r).scaled(half)).truncated(terms);
  }
  TruncatedSeries<C> s = series_mul(u, z).truncated(terms);
  return s.coeff_multiplied(branch).shifted(a.lead() / 2);
}

// Substitutes `inner` for the symbol of `outer`. Exact outer acts as a finite
// Laurent polynomial, so any inner lead is legal (finite regrouping); a
// truncated outer needs inner.lead >= 1 for the truncation window to close.
// `target_terms` bounds inverse-power expansions when inner is exact.
template <class C>
TruncatedSeries<C> series_compose(const TruncatedSeries<C>& outer,
                                  const TruncatedSeries<C>& inner, int target_terms = -1) {
  if (!outer.exact() && inner.lead() < 1)
    throw std::invalid_argument("series_compose with truncated outer needs inner.lead >= 1");
  TruncatedSeries<C> acc = TruncatedSeries<C>::zero(inner.symbol());
  TruncatedSeries<C> inv;
  bool have_inv = false;
  for (int e = outer.lead(); e < outer.order(); ++e) {
    C ce = outer.coeff(e);
    if (ce.is_zero()) continue;
    TruncatedSeries<C> pw;
    if (e >= 0) {
      pw = series_pow(inner, e);
    } else {
      if (!have_inv) {
        inv = series_inverse(inner, target_terms);
        have_inv = true;
      }
      pw = series_pow(inv, -e);
    }
    acc = series_add(acc, pw.coeff_multiplied(ce));
  }
  if (!outer.exact()) {
    int cap = outer.order() * inner.lead();
    acc = acc.truncated(acc.exact() ? cap : std::min(acc.order(), cap));
  }
  return acc;
}

// Compositional inverse for series of the shape a_{-1} y^{-1} + a_0 + a_1 y
// + ... (invertible top coefficient). If A gives w as a function of s via
// w = A(y)|_{y=1/s}, the returned B gives s back from w the same way, so
// series_compose(A, series_inverse(B, ...)) is the identity monomial.
template <class C>
TruncatedSeries<C> series_revert(const TruncatedSeries<C>& a, const std::string& out_symbol) {
  if (a.lead() != -1) throw std::domain_error("series_revert expects lead exponent -1");
  int terms = a.order() - a.lead();
  if (terms < 2) throw std::domain_error("series_revert needs at least two known terms");
  C top_inv = coeff_invert_unit(a.coeff(-1));
  TruncatedSeries<C> id = TruncatedSeries<C>::monomial(out_symbol, -1, unit_one<C>());
  TruncatedSeries<C> rhs0 =
      series_sub(id, TruncatedSeries<C>::monomial(out_symbol, 0, a.coeff(0)));
  TruncatedSeries<C> b = rhs0.coeff_multiplied(top_inv).truncated(terms - 1);
  for (int it = 0; it < terms + 1; ++it) {
    TruncatedSeries<C> binv = series_inverse(b);
    TruncatedSeries<C> acc = rhs0;
    TruncatedSeries<C> pw = TruncatedSeries<C>::monomial(out_symbol, 0, unit_one<C>());
    for (int k = 1; k < a.order(); ++k) {
      pw = series_mul(pw, binv).truncated(terms - 1);
      C ak = a.coeff(k);
      if (!ak.is_zero()) acc = series_sub(acc, pw.coeff_multiplied(ak));
    }
    b = acc.coeff_multiplied(top_inv).truncated(terms - 1);
  }
  return b;
}

}  // namespace forge
