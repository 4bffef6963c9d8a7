#pragma once

#include <string>

#include "forge/jacobi_ring.hpp"
#include "forge/riccati.hpp"
#include "forge/series.hpp"

namespace forge {

// Integrated closed-form asymptotic wave functions at the potential minima.
// Each carries the logarithmic derivative of one branch, order by order in
// s = 1/g, for exact comparison with the recursion chains.
enum class ClosedFormId {
  trig_first,              // expansion at the lower trig minimum
  trig_second,             // expansion at the upper trig minimum
  elliptic_first,          // expansion at the first elliptic point
  elliptic_first_compact,  // two-factor power form of the same solution
  elliptic_second,         // expansion at the second elliptic point
};

ClosedFormId parse_closed_form(const std::string& name);
const char* closed_form_name(ClosedFormId id);

// Recursion problem the closed form solves.
ProblemId closed_form_problem(ClosedFormId id);

// Whether the requested sign of the closed form pairs with the flipped chain.
bool closed_form_flip(ClosedFormId id, bool minus_branch);

// Log-derivative of the closed form, coefficients at s^{-1} up to the last
// printed order (s^2 for the full forms, s^0 for the compact one).
TruncatedSeries<JacobiElem> closed_form_dlog(ClosedFormId id, bool minus_branch);

// Log-derivative of the substituted recursion chain built from v_{-1}..v_max_ell
// (applies the i prefactor of the second elliptic expansion).
TruncatedSeries<JacobiElem> chain_dlog(ProblemId id, bool flip, int max_ell);

}  // namespace forge
