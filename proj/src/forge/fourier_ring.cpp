#include "forge/fourier_ring.hpp"

#include <stdexcept>

namespace forge {

FourierTrigPoly FourierTrigPoly::constant(ParamPoly c) {
  FourierTrigPoly f;
  f.add_mode(0, false, c);
  return f;
}

FourierTrigPoly FourierTrigPoly::harmonic(int n, bool sine, ParamPoly c) {
  FourierTrigPoly f;
  f.add_mode(n, sine, c);
  return f;
}

FourierTrigPoly FourierTrigPoly::secular(ParamPoly c) {
  FourierTrigPoly f;
  f.secular_ = std::move(c);
  return f;
}

bool FourierTrigPoly::is_constant() const {
  if (!secular_.is_zero()) return false;
  for (const auto& [n, cs] : modes_)
    if (n != 0) return false;
  return true;
}

ParamPoly FourierTrigPoly::mode(int n, bool sine) const {
  auto it = modes_.find(n);
  if (it == modes_.end()) return ParamPoly();
  return it->second[sine ? 1 : 0];
}

void FourierTrigPoly::add_mode(int n, bool sine, const ParamPoly& c) {
  if (c.is_zero()) return;
  if (n < 0) {  // cos is even, sin is odd
    add_mode(-n, sine, sine ? -c : c);
    return;
  }
  if (n == 0 && sine) return;  // sin(0) == 0
  auto& slot = modes_[n];
  int j = sine ? 1 : 0;
  slot[j] += c;
  if (slot[0].is_zero() && slot[1].is_zero()) modes_.erase(n);
}

FourierTrigPoly FourierTrigPoly::operator-() const {
  FourierTrigPoly r;
  r.secular_ = -secular_;
  for (const auto& [n, cs] : modes_) r.modes_.emplace(n, std::array<ParamPoly, 2>{-cs[0], -cs[1]});
  return r;
}

FourierTrigPoly FourierTrigPoly::operator+(const FourierTrigPoly& o) const {
  FourierTrigPoly r = *this;
  r.secular_ = r.secular_ + o.secular_;
  for (const auto& [n, cs] : o.modes_) {
    r.add_mode(n, false, cs[0]);
    r.add_mode(n, true, cs[1]);
  }
  return r;
}

FourierTrigPoly FourierTrigPoly::operator-(const FourierTrigPoly& o) const { return *this + -o; }

FourierTrigPoly FourierTrigPoly::operator*(const FourierTrigPoly& o) const {
  if (has_secular() && !o.is_constant())
    throw std::domain_error("secular factor may only multiply constants");
  if (o.has_secular() && !is_constant())
    throw std::domain_error("secular factor may only multiply constants");
  FourierTrigPoly r;
  r.secular_ = secular_ * o.mode(0, false) + o.secular_ * mode(0, false);
  GaussRat half(rat(1, 2));
  for (const auto& [m, a] : modes_) {
    for (const auto& [n, b] : o.modes_) {
      // cos*cos, cos*sin, sin*cos, sin*sin via product-to-sum.
      ParamPoly cc = (a[0] * b[0]).scaled(half);
      ParamPoly ss = (a[1] * b[1]).scaled(half);
      ParamPoly cs = (a[0] * b[1]).scaled(half);
      ParamPoly sc = (a[1] * b[0]).scaled(half);
      if (m == 0) {  // plain scaling by the constant mode
        r.add_mode(n, false, cc + cc);
        r.add_mode(n, true, cs + cs);
        continue;
      }
      if (n == 0) {
        r.add_mode(m, false, cc + cc);
        r.add_mode(m, true, sc + sc);
        continue;
      }
      r.add_mode(m - n, false, cc + ss);
      r.add_mode(m + n, false, cc - ss);
      r.add_mode(m + n, true, cs + sc);
      r.add_mode(m - n, true, sc - cs);
    }
  }
  return r;
}

FourierTrigPoly FourierTrigPoly::scaled(const GaussRat& c) const {
  return scaled(ParamPoly::constant(c));
}

FourierTrigPoly FourierTrigPoly::scaled(const ParamPoly& c) const {
  FourierTrigPoly r;
  r.secular_ = secular_ * c;
  for (const auto& [n, cs] : modes_) {
    r.add_mode(n, false, cs[0] * c);
    r.add_mode(n, true, cs[1] * c);
  }
  return r;
}

FourierTrigPoly FourierTrigPoly::deriv() const {
  FourierTrigPoly r;
  r.add_mode(0, false, secular_);
  for (const auto& [n, cs] : modes_) {
    if (n == 0) continue;
    ParamPoly nn = ParamPoly::constant(n);
    r.add_mode(n, true, -(cs[0] * nn));
    r.add_mode(n, false, cs[1] * nn);
  }
  return r;
}

FourierTrigPoly FourierTrigPoly::parity_flipped() const {
  FourierTrigPoly r;
  r.secular_ = -secular_;
  for (const auto& [n, cs] : modes_) r.modes_.emplace(n, std::array<ParamPoly, 2>{cs[0], -cs[1]});
  return r;
}

FourierTrigPoly FourierTrigPoly::antiderivative() const {
  if (has_secular()) throw std::domain_error("antiderivative of a secular term");
  FourierTrigPoly r;
  for (const auto& [n, cs] : modes_) {
    if (n == 0) {
      r.secular_ = r.secular_ + cs[0];
      continue;
    }
    GaussRat inv_n(rat(1, n));
    r.add_mode(n, true, cs[0].scaled(inv_n));
    r.add_mode(n, false, cs[1].scaled(-inv_n));
  }
  return r;
}

std::complex<double> FourierTrigPoly::eval(std::complex<double> x, const ParamBindings& b) const {
  std::complex<double> acc = secular_.is_zero() ? 0.0 : secular_.eval(b) * x;
  for (const auto& [n, cs] : modes_) {
    std::complex<double> nx = static_cast<double>(n) * x;
    if (!cs[0].is_zero()) acc += cs[0].eval(b) * std::cos(nx);
    if (!cs[1].is_zero()) acc += cs[1].eval(b) * std::sin(nx);
  }
  return acc;
}

std::string FourierTrigPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&out](const ParamPoly& c, const std::string& basis) {
    if (c.is_zero()) return;
    std::string cs = c.to_string();
    std::string term;
    if (basis.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = basis;
    } else if (cs == "-1") {
      term = "-" + basis;
    } else {
      bool parens = cs.find_first_of("+-", 1) != std::string::npos || cs.find(' ') != std::string::npos;
      term = (parens ? "(" + cs + ")" : cs) + "*" + basis;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  };
  append(secular_, "x");
  for (const auto& [n, cs] : modes_) {
    if (n == 0) {
      append(cs[0], "");
      continue;
    }
    append(cs[0], "cos(" + std::to_string(n) + "x)");
    append(cs[1], "sin(" + std::to_string(n) + "x)");
  }
  return out;
}

}  // namespace forge
