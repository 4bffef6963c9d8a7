#include "forge/param_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace forge {

namespace {
constexpr int kKprime = static_cast<int>(Param::kprime);
constexpr int kK = static_cast<int>(Param::k);
}  // namespace

ParamPoly ParamPoly::constant(GaussRat c) {
  ParamPoly p;
  if (!c.is_zero()) p.terms_.emplace(zero_exp(), std::move(c));
  return p;
}

ParamPoly ParamPoly::param(Param p, int exp) {
  ExpVec e = zero_exp();
  e[static_cast<int>(p)] = static_cast<std::int16_t>(exp);
  return monomial(GaussRat(1), e);
}

ParamPoly ParamPoly::monomial(GaussRat c, const ExpVec& e) {
  ParamPoly p;
  p.add_term(e, c);
  return p;
}

// Insertion point of the canonical-form invariant: reduce k'^(2m+r) to
// (1-k^2)^m * k'^r for nonnegative exponents.
void ParamPoly::add_term(const ExpVec& e, const GaussRat& c) {
  if (c.is_zero()) return;
  if (e[kKprime] >= 2) {
    ExpVec base = e;
    base[kKprime] = static_cast<std::int16_t>(e[kKprime] % 2);
    int m = e[kKprime] / 2;
    // (1 - k^2)^m expanded binomially; m stays small in practice.
    mpz_class binom = 1;
    for (int j = 0; j <= m; ++j) {
      ExpVec t = base;
      t[kK] = static_cast<std::int16_t>(t[kK] + 2 * j);
      GaussRat coef = c * GaussRat(mpq_class(binom) * ((j % 2) ? -1 : 1));
      auto it = terms_.find(t);
      if (it == terms_.end()) {
        terms_.emplace(t, coef);
      } else {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
      }
      binom = binom * (m - j) / (j + 1);
    }
    return;
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ParamPoly::is_zero() const {
  if (terms_.empty()) return true;
  int min_kp = 0;
  for (const auto& [e, c] : terms_)
    if (e[kKprime] < min_kp) min_kp = e[kKprime];
  // With all k' exponents in {0, 1} the stored map is a complete normal
  // form ({1, k'} is free over the Laurent ring in the other parameters).
  if (min_kp >= 0) return false;
  // Negative k' powers: multiply by the unit k'^{2t}; insertion reduces the
  // now-nonnegative even powers, landing back in the canonical sector.
  int t = (-min_kp + 1) / 2;
  ParamPoly shifted;
  for (const auto& [e, c] : terms_) {
    ExpVec s = e;
    s[kKprime] = static_cast<std::int16_t>(s[kKprime] + 2 * t);
    shifted.add_term(s, c);
  }
  return shifted.terms_.empty();
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == zero_exp();
}

GaussRat ParamPoly::constant_value() const {
  if (terms_.empty()) return GaussRat();
  if (!is_constant()) throw std::logic_error("constant_value on non-constant ParamPoly");
  return terms_.begin()->second;
}

bool ParamPoly::is_unit_monomial() const { return terms_.size() == 1; }

ParamPoly ParamPoly::unit_inverse() const {
  if (!is_unit_monomial()) throw std::domain_error("ParamPoly inverse needs a single-term element");
  const auto& [e, c] = *terms_.begin();
  // 1/k'^r for r in {0,1} stays a monomial; positive even powers were
  // already rewritten, so inversion never reintroduces them.
  ExpVec inv{};
  for (int j = 0; j < kParamCount; ++j) inv[j] = static_cast<std::int16_t>(-e[j]);
  return monomial(GaussRat(1) / c, inv);
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  ParamPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ExpVec e;
      for (int j = 0; j < kParamCount; ++j) e[j] = static_cast<std::int16_t>(ea[j] + eb[j]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

ParamPoly ParamPoly::scaled(const GaussRat& c) const {
  ParamPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

ParamPoly ParamPoly::pow(int e) const {
  if (e < 0) return unit_inverse().pow(-e);
  ParamPoly r = constant(1);
  for (int j = 0; j < e; ++j) r = r * *this;
  return r;
}

bool ParamPoly::contains(Param p) const {
  int idx = static_cast<int>(p);
  for (const auto& [e, c] : terms_)
    if (e[idx] != 0) return true;
  return false;
}

int ParamPoly::max_exponent(Param p) const {
  int idx = static_cast<int>(p), m = 0;
  for (const auto& [e, c] : terms_)
    if (e[idx] > m) m = e[idx];
  return m;
}

std::map<int, ParamPoly> ParamPoly::decompose(Param p) const {
  int idx = static_cast<int>(p);
  std::map<int, ParamPoly> out;
  for (const auto& [e, c] : terms_) {
    ExpVec r = e;
    int ep = r[idx];
    r[idx] = 0;
    out[ep].add_term(r, c);
  }
  return out;
}

std::complex<double> ParamPoly::eval(const ParamBindings& b) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int j = 0; j < kParamCount; ++j) {
      if (e[j] == 0) continue;
      auto it = b.find(static_cast<Param>(j));
      if (it == b.end())
        throw std::invalid_argument(std::string("unbound parameter ") +
                                    param_name(static_cast<Param>(j)));
      t *= std::pow(it->second, static_cast<double>(e[j]));
    }
    acc += t;
  }
  return acc;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int j = 0; j < kParamCount; ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += param_name(static_cast<Param>(j));
      if (e[j] != 1) mono += "^" + std::to_string(e[j]);
    }
    std::string cs = c.to_string();
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (c == GaussRat(1)) {
      term = mono;
    } else if (c == GaussRat(-1)) {
      term = "-" + mono;
    } else {
      bool needs_parens = cs.find_first_of("+-", 1) != std::string::npos;
      term = (needs_parens ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

ParamBindings with_derived_params(ParamBindings b) {
  if (b.count(Param::k) && !b.count(Param::kprime)) {
    std::complex<double> k = b.at(Param::k);
    b[Param::kprime] = std::sqrt(std::complex<double>(1.0, 0.0) - k * k);
  }
  return b;
}

}  // namespace forge
