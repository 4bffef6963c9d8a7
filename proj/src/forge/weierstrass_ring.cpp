#include "forge/weierstrass_ring.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace forge {

namespace {

// Scratch ring for products: polynomials in (p, p') over ParamPoly with the
// p' degree held in {0, 1} by the cubic p'^2 = 4p^3 - g2 p - g3.
using PPKey = std::pair<int, int>;  // (p degree, p' degree)
using PPoly = std::map<PPKey, ParamPoly>;

ParamPoly g2_poly() { return ParamPoly::param(Param::g2); }
ParamPoly g3_poly() { return ParamPoly::param(Param::g3); }
ParamPoly zeta1_poly() { return ParamPoly::param(Param::zeta1); }

void pp_add(PPoly& f, int d, int s, const ParamPoly& c) {
  if (c.is_zero()) return;
  if (s >= 2) {
    // p'^2 -> 4p^3 - g2 p - g3, at most one fold is ever needed.
    pp_add(f, d + 3, s - 2, c.scaled(GaussRat(4)));
    pp_add(f, d + 1, s - 2, -(c * g2_poly()));
    pp_add(f, d, s - 2, -(c * g3_poly()));
    return;
  }
  auto it = f.find({d, s});
  if (it == f.end()) {
    f.emplace(PPKey{d, s}, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

PPoly pp_mul(const PPoly& a, const PPoly& b) {
  PPoly r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      pp_add(r, ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

PPoly pp_deriv(const PPoly& a) {
  PPoly r;
  for (const auto& [k, c] : a) {
    const auto [d, s] = k;
    if (d > 0) pp_add(r, d - 1, s + 1, c.scaled(GaussRat(d)));
    if (s > 0) {
      // (p')' = 6p^2 - g2/2.
      ParamPoly cs = c.scaled(GaussRat(s));
      pp_add(r, d + 2, s - 1, cs.scaled(GaussRat(6)));
      pp_add(r, d, s - 1, (cs * g2_poly()).scaled(GaussRat(rat(-1, 2))));
    }
  }
  return r;
}

// d^k p as a reduced (p, p') polynomial.
PPoly p_deriv_poly(int k) {
  PPoly f;
  pp_add(f, 1, 0, ParamPoly::constant(1));
  for (int j = 0; j < k; ++j) f = pp_deriv(f);
  return f;
}

int pp_pure_degree(const PPoly& f, int s) {
  int deg = -1;
  for (const auto& [k, c] : f) {
    (void)c;
    if (k.second == s && k.first > deg) deg = k.first;
  }
  return deg;
}

}  // namespace

WeierstrassElem WeierstrassElem::constant(ParamPoly c) {
  WeierstrassElem w;
  w.one_ = std::move(c);
  w.prune();
  return w;
}

WeierstrassElem WeierstrassElem::x_term(ParamPoly c) {
  WeierstrassElem w;
  w.x_ = std::move(c);
  w.prune();
  return w;
}

WeierstrassElem WeierstrassElem::zeta_term(ParamPoly c) {
  WeierstrassElem w;
  w.zeta_ = std::move(c);
  w.prune();
  return w;
}

WeierstrassElem WeierstrassElem::p_term(ParamPoly c, int k) {
  if (k < 0) throw std::invalid_argument("negative derivative order");
  WeierstrassElem w;
  w.p_[k] = std::move(c);
  w.prune();
  return w;
}

void WeierstrassElem::prune() {
  for (auto it = p_.begin(); it != p_.end();) {
    if (it->second.is_zero())
      it = p_.erase(it);
    else
      ++it;
  }
}

bool WeierstrassElem::is_zero() const {
  return one_.is_zero() && x_.is_zero() && zeta_.is_zero() && p_.empty();
}

bool WeierstrassElem::is_constant() const {
  return x_.is_zero() && zeta_.is_zero() && p_.empty();
}

ParamPoly WeierstrassElem::p_part(int k) const {
  auto it = p_.find(k);
  return it == p_.end() ? ParamPoly() : it->second;
}

int WeierstrassElem::max_deriv() const { return p_.empty() ? -1 : p_.rbegin()->first; }

WeierstrassElem WeierstrassElem::operator-() const { return scaled(GaussRat(-1)); }

WeierstrassElem WeierstrassElem::operator+(const WeierstrassElem& o) const {
  WeierstrassElem r = *this;
  r.one_ += o.one_;
  r.x_ += o.x_;
  r.zeta_ += o.zeta_;
  for (const auto& [k, c] : o.p_) r.p_[k] += c;
  r.prune();
  return r;
}

WeierstrassElem WeierstrassElem::operator-(const WeierstrassElem& o) const {
  return *this + (-o);
}

WeierstrassElem WeierstrassElem::scaled(const GaussRat& c) const {
  WeierstrassElem r = *this;
  r.one_ = r.one_.scaled(c);
  r.x_ = r.x_.scaled(c);
  r.zeta_ = r.zeta_.scaled(c);
  for (auto& [k, p] : r.p_) {
    (void)k;
    p = p.scaled(c);
  }
  r.prune();
  return r;
}

WeierstrassElem WeierstrassElem::scaled(const ParamPoly& c) const {
  WeierstrassElem r = *this;
  r.one_ = r.one_ * c;
  r.x_ = r.x_ * c;
  r.zeta_ = r.zeta_ * c;
  for (auto& [k, p] : r.p_) {
    (void)k;
    p = p * c;
  }
  r.prune();
  return r;
}

WeierstrassElem WeierstrassElem::operator*(const WeierstrassElem& o) const {
  if (is_constant()) return o.scaled(one_);
  if (o.is_constant()) return scaled(o.one_);
  if (!x_.is_zero() || !zeta_.is_zero() || !o.x_.is_zero() || !o.zeta_.is_zero())
    throw std::domain_error("product with a secular or zeta~ part");

  // Convert both factors to (p, p') form; p~ = p + zeta1.
  auto to_pp = [](const WeierstrassElem& w) {
    PPoly f;
    pp_add(f, 0, 0, w.one_);
    for (const auto& [k, c] : w.p_) {
      if (k == 0) {
        pp_add(f, 1, 0, c);
        pp_add(f, 0, 0, c * zeta1_poly());
      } else {
        for (const auto& [key, t] : p_deriv_poly(k))
          pp_add(f, key.first, key.second, c * t);
      }
    }
    return f;
  };
  PPoly prod = pp_mul(to_pp(*this), to_pp(o));

  // Fold back onto {1, d^k p~}: the p'-linear part against odd derivatives,
  // the pure-p part against even ones; both tables are degree-triangular
  // with rational leading coefficients.
  WeierstrassElem r;
  for (int s = 1; s >= 0; --s) {
    for (int deg = pp_pure_degree(prod, s); deg >= 0; deg = pp_pure_degree(prod, s)) {
      if (s == 0 && deg <= 1) break;
      int k = (s == 1) ? 2 * deg + 1 : 2 * (deg - 1);
      PPoly tab = p_deriv_poly(k);
      ParamPoly lead_c = tab.at({deg, s});
      if (!lead_c.is_constant()) throw std::logic_error("non-constant table lead");
      ParamPoly c = prod.at({deg, s}).scaled(GaussRat(1) / lead_c.constant_value());
      r.p_[k] += c;
      for (const auto& [key, t] : tab) pp_add(prod, key.first, key.second, -(c * t));
    }
  }
  // Remaining a1 p + a0: p = p~ - zeta1.
  auto it1 = prod.find({1, 0});
  if (it1 != prod.end()) {
    r.p_[0] += it1->second;
    r.one_ += -(it1->second * zeta1_poly());
    prod.erase(it1);
  }
  auto it0 = prod.find({0, 0});
  if (it0 != prod.end()) {
    r.one_ += it0->second;
    prod.erase(it0);
  }
  if (!prod.empty()) throw std::logic_error("unreduced product remainder");
  r.prune();
  return r;
}

WeierstrassElem WeierstrassElem::deriv() const {
  WeierstrassElem r;
  r.one_ = x_;
  r.p_[0] = -zeta_;
  for (const auto& [k, c] : p_) r.p_[k + 1] += c;
  r.prune();
  return r;
}

WeierstrassElem WeierstrassElem::antiderivative() const {
  if (!x_.is_zero() || !zeta_.is_zero())
    throw std::domain_error("primitive of x or zeta~ leaves the ring");
  WeierstrassElem r;
  r.x_ = one_;
  for (const auto& [k, c] : p_) {
    if (k == 0)
      r.zeta_ += -c;
    else
      r.p_[k - 1] += c;
  }
  r.prune();
  return r;
}

WeierstrassElem WeierstrassElem::parity_flipped() const {
  WeierstrassElem r = *this;
  r.x_ = -r.x_;
  r.zeta_ = -r.zeta_;
  for (auto& [k, c] : r.p_)
    if (k % 2 != 0) c = -c;
  r.prune();
  return r;
}

std::complex<double> WeierstrassElem::eval(const WeierstrassPoint& pt,
                                           const ParamBindings& b) const {
  std::complex<double> v = one_.eval(b);
  v += x_.eval(b) * pt.x;
  v += zeta_.eval(b) * pt.zeta;
  for (const auto& [k, c] : p_) {
    if (k >= static_cast<int>(pt.p_derivs.size()))
      throw std::out_of_range("point carries too few p~ derivatives");
    v += c.eval(b) * pt.p_derivs[static_cast<size_t>(k)];
  }
  return v;
}

std::string WeierstrassElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const ParamPoly& c, const std::string& name) {
    if (c.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (!name.empty()) os << "*" << name;
  };
  emit(one_, "");
  emit(x_, "x");
  emit(zeta_, "zeta~");
  for (const auto& [k, c] : p_) {
    std::string name = "p~";
    if (k > 0 && k <= 3)
      name += std::string(static_cast<size_t>(k), '\'');
    else if (k > 3)
      name += "^(" + std::to_string(k) + ")";
    emit(c, name);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace forge
