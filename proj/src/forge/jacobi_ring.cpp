#include "forge/jacobi_ring.hpp"

#include <stdexcept>

namespace forge {

JacobiElem JacobiElem::constant(ParamPoly c, bool trig) {
  JacobiElem r(trig);
  r.add_term(0, 0, 0, c);
  return r;
}

JacobiElem JacobiElem::term(ParamPoly c, int sn_exp, int cn_exp, int dn_exp, bool trig) {
  JacobiElem r(trig);
  r.add_term(sn_exp, cn_exp, dn_exp, c);
  return r;
}

void JacobiElem::check_mode(const JacobiElem& o) const {
  if (!terms_.empty() && !o.terms_.empty() && trig_ != o.trig_)
    throw std::logic_error("mixed trigonometric and elliptic Jacobi elements");
}

// Reduction happens here: dn^2 -> 1 - k^2 sn^2, cn^{2m+r} -> (1-sn^2)^m cn^r
// for nonnegative cn exponents. Negative cn powers stay; the zero test
// clears them.
void JacobiElem::add_term(int p, int q, int d, const ParamPoly& c) {
  if (c.is_zero()) return;
  if (d < 0) throw std::domain_error("negative dn exponent");
  if (trig_ && d != 0) {  // dn == 1
    add_term(p, q, 0, c);
    return;
  }
  if (d >= 2) {
    int m = d / 2, e = d % 2;
    // (1 - k^2 sn^2)^m
    mpz_class binom = 1;
    for (int j = 0; j <= m; ++j) {
      GaussRat bc = GaussRat(mpq_class(binom) * ((j % 2) ? -1 : 1));
      add_term(p + 2 * j, q, e, c * ParamPoly::param(Param::k, 2 * j).scaled(bc));
      binom = binom * (m - j) / (j + 1);
    }
    return;
  }
  if (q >= 2) {
    int m = q / 2, r = q % 2;
    // (1 - sn^2)^m
    mpz_class binom = 1;
    for (int j = 0; j <= m; ++j) {
      GaussRat bc = GaussRat(mpq_class(binom) * ((j % 2) ? -1 : 1));
      add_term(p + 2 * j, r, d, c.scaled(bc));
      binom = binom * (m - j) / (j + 1);
    }
    return;
  }
  JacKey key{p, q, d};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool JacobiElem::is_zero() const {
  if (terms_.empty()) return true;
  int min_q = 0;
  for (const auto& [k, c] : terms_)
    if (k.q < min_q) min_q = k.q;
  if (min_q >= 0) return false;  // canonical sector: {1, cn, dn, cn dn} over Laurent sn
  int t = (-min_q + 1) / 2;
  JacobiElem shifted(trig_);
  for (const auto& [k, c] : terms_) shifted.add_term(k.p, k.q + 2 * t, k.e, c);
  return shifted.terms_.empty();
}

bool JacobiElem::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() == 1 && terms_.begin()->first == JacKey{}) return true;
  return (*this - constant(constant_part(), trig_)).is_zero();
}

ParamPoly JacobiElem::constant_part() const {
  auto it = terms_.find(JacKey{});
  return it == terms_.end() ? ParamPoly() : it->second;
}

JacobiElem JacobiElem::operator-() const {
  JacobiElem r(trig_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

JacobiElem JacobiElem::operator+(const JacobiElem& o) const {
  check_mode(o);
  JacobiElem r = terms_.empty() ? JacobiElem(o.trig_) : JacobiElem(trig_);
  r.terms_ = terms_;
  for (const auto& [k, c] : o.terms_) r.add_term(k.p, k.q, k.e, c);
  return r;
}

JacobiElem JacobiElem::operator-(const JacobiElem& o) const { return *this + -o; }

JacobiElem JacobiElem::operator*(const JacobiElem& o) const {
  check_mode(o);
  JacobiElem r(terms_.empty() ? o.trig_ : trig_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(ka.p + kb.p, ka.q + kb.q, ka.e + kb.e, ca * cb);
  return r;
}

JacobiElem JacobiElem::scaled(const GaussRat& c) const {
  JacobiElem r(trig_);
  if (c.is_zero()) return r;
  for (const auto& [k, t] : terms_) r.terms_.emplace(k, t.scaled(c));
  return r;
}

JacobiElem JacobiElem::scaled(const ParamPoly& c) const {
  JacobiElem r(trig_);
  for (const auto& [k, t] : terms_) r.add_term(k.p, k.q, k.e, t * c);
  return r;
}

JacobiElem JacobiElem::deriv() const {
  JacobiElem r(trig_);
  for (const auto& [k, c] : terms_) {
    ParamPoly cp = c.scaled(GaussRat(k.p));
    ParamPoly cq = c.scaled(GaussRat(-k.q));
    if (trig_) {
      r.add_term(k.p - 1, k.q + 1, 0, cp);
      r.add_term(k.p + 1, k.q - 1, 0, cq);
      continue;
    }
    r.add_term(k.p - 1, k.q + 1, k.e + 1, cp);
    r.add_term(k.p + 1, k.q - 1, k.e + 1, cq);
    if (k.e == 1) r.add_term(k.p + 1, k.q + 1, 0, c * ParamPoly::param(Param::k, 2).scaled(GaussRat(-1)));
  }
  return r;
}

JacobiElem JacobiElem::divided_by_term(const JacobiElem& d) const {
  check_mode(d);
  if (d.terms_.size() != 1) throw std::domain_error("division needs a one-term divisor");
  const auto& [dk, dc] = *d.terms_.begin();
  if (dk.e != 0) throw std::domain_error("division by a dn factor is not closed");
  ParamPoly inv = ParamPoly::monomial(GaussRat(1), zero_exp());
  {
    ParamPoly divisor = dc;
    if (!divisor.is_unit_monomial()) throw std::domain_error("divisor coefficient must be a monomial");
    inv = divisor.unit_inverse();
  }
  JacobiElem r(trig_);
  for (const auto& [k, c] : terms_) r.add_term(k.p - dk.p, k.q - dk.q, k.e, c * inv);
  return r;
}

JacobiElem JacobiElem::parity_flipped() const {
  JacobiElem r(trig_);
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(k, (k.p % 2 == 0) ? c : -c);
  return r;
}

namespace {
std::complex<double> ipow(std::complex<double> b, int e) {
  if (e < 0) return 1.0 / ipow(b, -e);
  std::complex<double> r = 1.0;
  for (int j = 0; j < e; ++j) r *= b;
  return r;
}
}  // namespace

std::complex<double> JacobiElem::eval(std::complex<double> sn, std::complex<double> cn,
                                      std::complex<double> dn, const ParamBindings& b) const {
  std::complex<double> acc = 0.0;
  for (const auto& [k, c] : terms_)
    acc += c.eval(b) * ipow(sn, k.p) * ipow(cn, k.q) * ipow(dn, k.e);
  return acc;
}

std::string JacobiElem::to_string() const {
  if (terms_.empty()) return "0";
  int min_p = 0, min_q = 0;
  for (const auto& [k, c] : terms_) {
    if (k.p < min_p) min_p = k.p;
    if (k.q < min_q) min_q = k.q;
  }
  const char* sn_name = trig_ ? "sin" : "sn";
  const char* cn_name = trig_ ? "cos" : "cn";
  auto mono = [&](const JacKey& k) {
    std::string m;
    auto put = [&m](const char* base, int e) {
      if (e == 0) return;
      if (!m.empty()) m += "*";
      m += base;
      if (e != 1) m += "^" + std::to_string(e);
    };
    put(sn_name, k.p);
    put(cn_name, k.q);
    put("dn", k.e);
    return m;
  };
  std::string num;
  for (const auto& [k, c] : terms_) {
    JacKey shifted{k.p - min_p, k.q - min_q, k.e};
    std::string ms = mono(shifted);
    std::string cs = c.to_string();
    std::string term;
    if (ms.empty()) {
      term = (cs.find_first_of("+-", 1) != std::string::npos && cs.find(' ') != std::string::npos)
                 ? "(" + cs + ")"
                 : cs;
    } else if (cs == "1") {
      term = ms;
    } else if (cs == "-1") {
      term = "-" + ms;
    } else {
      bool parens = cs.find(' ') != std::string::npos;
      term = (parens ? "(" + cs + ")" : cs) + "*" + ms;
    }
    if (num.empty()) {
      num = term;
    } else if (term[0] == '-') {
      num += " - " + term.substr(1);
    } else {
      num += " + " + term;
    }
  }
  if (min_p == 0 && min_q == 0) return num;
  std::string den;
  auto put_den = [&den](const char* base, int e) {
    if (e == 0) return;
    if (!den.empty()) den += "*";
    den += base;
    if (e != 1) den += "^" + std::to_string(e);
  };
  put_den(sn_name, -min_p);
  put_den(cn_name, -min_q);
  return "(" + num + ") / (" + den + ")";
}

}  // namespace forge
