#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "forge/elliptic.hpp"

namespace forge {

using PotentialFn = std::function<Cx(Cx)>;

PotentialFn trig_potential_fn(double h);                              // 2 h cos 2x
PotentialFn elliptic_potential_fn(double alpha, EllipticParams ell);  // alpha p~(x)

// Transfer matrix of (psi, psi') across one period of psi'' = (u + lambda) psi,
// integrated along straight segments through the caller's waypoints. The
// Floquet exponent solves trace = 2 cos(nu T), T = waypoints.back() - front().
// nu is the branch nearest nu_ref; the paired reading -nu is equally valid.
// Extraction uses sin^2(nu T) = -((m00-m11)^2/4 + m01 m10), exact when
// det = 1, which stays accurate at entry level where acos(trace/2) is
// ill-conditioned (trace near +-2); such points are flagged.
struct MonodromyResult {
  Cx m[2][2];
  Cx trace;
  Cx nu;
  Cx nu_paired;
  double wronskian_defect;  // |det - 1|
  std::size_t steps;
  double tolerance;
  bool near_degenerate;  // |trace/2| within 1e-9 of 1
};

MonodromyResult monodromy(const PotentialFn& u, Cx lambda, const std::vector<Cx>& waypoints,
                          Cx nu_ref, double tol = 1e-12);
// Real period starting at x0 = 0, branch reference sqrt(-lambda) (free case).
MonodromyResult monodromy(const PotentialFn& u, Cx lambda, double period, double tol = 1e-12);

// Eigenvalue of the even matching condition: integrate the growing solution
// from the barrier point into the well and drive d/dx log psi at x_match to
// zero by a secant iteration from lambda_guess. For a potential well this
// agrees with the center of the nearby band up to the exponentially small
// splitting, which root-finding on the trace cannot resolve in doubles once
// the canonical solutions grow past ~1e8 (the trace becomes a catastrophic
// cancellation while the matching slope stays on the level-spacing scale).
Cx matching_eigenvalue(const PotentialFn& u, Cx lambda_guess, Cx x_barrier, Cx x_match,
                       double tol = 1e-12);

// Numeric comparison record for one oracle-vs-series point.
struct ErrorReport {
  Cx lambda;
  Cx nu_series;
  Cx nu_oracle;
  double abs_err;
  double omitted_term_bound;  // first omitted series term mapped to nu units
  double wronskian_defect;
};

// Deterministic JSON: keys sorted, complex values as [re, im] pairs.
std::string to_json(const ErrorReport& r);

// Compares the truncated asymptotic wave function psi = exp(log_psi) against
// the ODE solution with initial data matched at x_grid.front(): max over the
// grid of |psi_asym - psi_ode| / max |psi_asym|. residual is the max over the
// grid of |psi'' - (u + lambda) psi| / |psi| for the asymptotic psi itself,
// with psi''/psi = dv + v^2 and v = dlog_psi; dv is a central difference of v.
struct WaveErrorReport {
  Cx lambda;
  double abs_err;
  double residual;
  std::size_t steps;
};

WaveErrorReport wavefunction_error(const std::function<Cx(Cx)>& log_psi,
                                   const std::function<Cx(Cx)>& dlog_psi, const PotentialFn& u,
                                   Cx lambda, const std::vector<Cx>& x_grid, double tol = 1e-12);

std::string to_json(const WaveErrorReport& r);

}  // namespace forge
