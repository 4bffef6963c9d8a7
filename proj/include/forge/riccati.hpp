#pragma once

#include <string>
#include <vector>

#include "forge/jacobi_ring.hpp"
#include "forge/param_poly.hpp"
#include "forge/series.hpp"

namespace forge {

enum class ProblemId {
  mathieu_large,
  mathieu_min0,
  mathieu_minpi2,
  lame_large,
  lame_z0,
  lame_zK,
};

ProblemId parse_problem_id(const std::string& name);
const char* problem_id_name(ProblemId id);
bool is_large_energy(ProblemId id);

// Exponent-slope chain for v' + v^2 = u + lambda at large eigenvalue:
// v = 1/t + sum_{l>=1} v_l t^l in t = lambda^{-1/2}, with
// v_1 = u/2 and v_{m+1} = -(v_m' + sum_{j=1}^{m-1} v_j v_{m-j}) / 2.
// Returns [v_1, ..., v_count].
template <class E>
std::vector<E> large_energy_chain(const E& u, int count) {
  std::vector<E> v;
  v.reserve(static_cast<size_t>(count));
  v.push_back(u.scaled(GaussRat(rat(1, 2))));
  for (int m = 1; m < count; ++m) {
    E acc = v[static_cast<size_t>(m - 1)].deriv();
    for (int j = 1; j <= m - 1; ++j)
      acc = acc + v[static_cast<size_t>(j - 1)] * v[static_cast<size_t>(m - j - 1)];
    v.push_back(acc.scaled(GaussRat(rat(-1, 2))));
  }
  return v;
}

// Expansion data near a potential minimum: the Riccati right side splits as
// r_minus2 g^2 + r_zero with g the large coupling, and the chain runs in
// descending powers of g. With i_prefactor the solution is v = i sum w_l g^{-l}
// and the stored branch is w_{-1} (so branch^2 == -r_minus2); otherwise
// branch = v_{-1} with branch^2 == r_minus2.
struct SmallEnergyProblem {
  ProblemId id;
  JacobiElem r_minus2;
  JacobiElem r_zero;
  JacobiElem branch;
  bool i_prefactor = false;
  Param spectral = Param::delta;
  Param floquet = Param::nu;
};

// flip_branch selects the second solution (branch -> -branch).
SmallEnergyProblem small_energy_problem(ProblemId id, bool flip_branch = false);

// Returns [v_{-1}, v_0, ..., v_max_ell] (the w_l chain when i_prefactor).
std::vector<JacobiElem> small_energy_chain(const SmallEnergyProblem& pr, int max_ell);

// Chains packed as series in the deflation variable t (descending powers of
// sqrt(lambda) or of the coupling g), ready for residual checks and exponent
// assembly.
template <class E>
TruncatedSeries<E> chain_to_series(const std::vector<E>& chain, int lead,
                                   const std::string& symbol) {
  return TruncatedSeries<E>::from_coeffs(symbol, lead, chain, false);
}

}  // namespace forge
