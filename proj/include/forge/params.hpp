#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace forge {

// Formal parameters the coefficient ring may mention. Fixed order; exponent
// vectors index by this enum. kprime carries the reduction k'^2 -> 1 - k^2,
// so canonical forms never hold kprime powers above 1 (negative powers stay).
enum class Param : int {
  h = 0,
  delta,
  alpha,
  k,
  kprime,
  Lambda,
  LambdaT,
  zeta1,
  g2,
  g3,
  n,
  mu,
  nu,
};

inline constexpr int kParamCount = 13;

inline const char* param_name(Param p) {
  static const char* names[kParamCount] = {"h",  "delta", "alpha",  "k", "k'", "Lambda", "Lambda~",
                                           "zeta1", "g2", "g3", "n", "mu", "nu"};
  return names[static_cast<int>(p)];
}

// Laurent exponent vector, one slot per Param.
using ExpVec = std::array<std::int16_t, kParamCount>;

inline ExpVec zero_exp() {
  ExpVec e{};
  e.fill(0);
  return e;
}

}  // namespace forge
