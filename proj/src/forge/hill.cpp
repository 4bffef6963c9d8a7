#include "forge/hill.hpp"

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace forge {

namespace odeint = boost::numeric::odeint;

PotentialFn trig_potential_fn(double h) {
  return [h](Cx x) { return 2.0 * h * std::cos(2.0 * x); };
}

PotentialFn elliptic_potential_fn(double alpha, EllipticParams ell) {
  return [alpha, ell](Cx x) { return alpha * wp_tilde(x, ell); };
}

namespace {

using State = std::array<Cx, 4>;  // (psi1, psi1', psi2, psi2')

// Integrates the pair of solutions along the segment [a, b] in the outer
// variable; the inner variable runs over [0, 1].
std::size_t integrate_segment(const PotentialFn& u, Cx lambda, Cx a, Cx b, State& s, double tol) {
  Cx len = b - a;
  auto rhs = [&](const State& y, State& dy, double t) {
    Cx x = a + t * len;
    Cx f = u(x) + lambda;
    dy[0] = len * y[1];
    dy[1] = len * f * y[0];
    dy[2] = len * y[3];
    dy[3] = len * f * y[2];
  };
  auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(tol, tol);
  return odeint::integrate_adaptive(stepper, rhs, s, 0.0, 1.0, 1e-3);
}

// Solves cos(theta) = t with sin(theta) = +-s, picking the solution nearest
// theta_ref among theta = k pi +- asin(s).
Cx solve_angle(Cx t, Cx s, Cx theta_ref) {
  constexpr double kPi = std::numbers::pi;
  Cx phi = std::asin(s);
  long k0 = std::lround(theta_ref.real() / kPi);
  Cx best = std::numeric_limits<double>::quiet_NaN();
  double best_dist = std::numeric_limits<double>::infinity();
  for (long k = k0 - 2; k <= k0 + 2; ++k) {
    for (double sg : {1.0, -1.0}) {
      Cx th = static_cast<double>(k) * kPi + sg * phi;
      if (std::abs(std::cos(th) - t) > 1e-6 * (1.0 + std::abs(t))) continue;
      double dist = std::abs(th - theta_ref);
      if (dist < best_dist) {
        best_dist = dist;
        best = th;
      }
    }
  }
  if (best_dist == std::numeric_limits<double>::infinity())
    throw std::runtime_error("monodromy: no angle branch consistent with the trace");
  return best;
}

}  // namespace

MonodromyResult monodromy(const PotentialFn& u, Cx lambda, const std::vector<Cx>& waypoints,
                          Cx nu_ref, double tol) {
  if (waypoints.size() < 2) throw std::invalid_argument("monodromy: need at least two waypoints");
  if (tol < 1e-13) throw std::invalid_argument("monodromy: tolerance below 1e-13");
  State s{Cx(1.0), Cx(0.0), Cx(0.0), Cx(1.0)};
  std::size_t steps = 0;
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
    steps += integrate_segment(u, lambda, waypoints[i], waypoints[i + 1], s, tol);

  MonodromyResult r;
  r.m[0][0] = s[0];
  r.m[1][0] = s[1];
  r.m[0][1] = s[2];
  r.m[1][1] = s[3];
  r.trace = r.m[0][0] + r.m[1][1];
  r.wronskian_defect = std::abs(r.m[0][0] * r.m[1][1] - r.m[0][1] * r.m[1][0] - 1.0);
  r.steps = steps;
  r.tolerance = tol;
  r.near_degenerate = std::abs(std::abs(r.trace) - 2.0) < 1e-9;

  Cx T = waypoints.back() - waypoints.front();
  Cx half_diff = 0.5 * (r.m[0][0] - r.m[1][1]);
  Cx sin2 = -(half_diff * half_diff + r.m[0][1] * r.m[1][0]);
  Cx theta = solve_angle(0.5 * r.trace, std::sqrt(sin2), nu_ref * T);
  r.nu = theta / T;
  r.nu_paired = -r.nu;
  return r;
}

MonodromyResult monodromy(const PotentialFn& u, Cx lambda, double period, double tol) {
  return monodromy(u, lambda, {Cx(0.0), Cx(period)}, std::sqrt(-lambda), tol);
}

namespace {

// d/dx log psi at x_match for the solution launched at the barrier point with
// the outward-growing slope (contamination by the second solution decays
// relative to it on the way in).
Cx matching_slope(const PotentialFn& u, Cx lambda, Cx x_barrier, Cx x_match, double tol) {
  Cx rate = std::sqrt(u(x_barrier) + lambda);
  Cx dir = (x_match - x_barrier) / std::abs(x_match - x_barrier);
  State s{Cx(1.0), rate * dir, Cx(0.0), Cx(0.0)};
  integrate_segment(u, lambda, x_barrier, x_match, s, tol);
  return s[1] / s[0];
}

}  // namespace

Cx matching_eigenvalue(const PotentialFn& u, Cx lambda_guess, Cx x_barrier, Cx x_match,
                       double tol) {
  Cx l0 = lambda_guess;
  Cx l1 = lambda_guess * (1.0 + 1e-7) + 1e-9;
  Cx g0 = matching_slope(u, l0, x_barrier, x_match, tol);
  Cx g1 = matching_slope(u, l1, x_barrier, x_match, tol);
  for (int it = 0; it < 64; ++it) {
    if (g1 == g0) break;
    Cx l2 = l1 - g1 * (l1 - l0) / (g1 - g0);
    l0 = l1;
    g0 = g1;
    l1 = l2;
    if (std::abs(l1 - l0) < 1e-13 * (1.0 + std::abs(l1))) return l1;
    g1 = matching_slope(u, l1, x_barrier, x_match, tol);
  }
  if (std::abs(g1) > 1e-6 * (1.0 + std::abs(lambda_guess)))
    throw std::runtime_error("matching_eigenvalue: secant did not converge");
  return l1;
}

namespace {

nlohmann::json cx_json(Cx v) { return nlohmann::json::array({v.real(), v.imag()}); }

}  // namespace

std::string to_json(const ErrorReport& r) {
  nlohmann::json j;
  j["abs_err"] = r.abs_err;
  j["lambda"] = cx_json(r.lambda);
  j["nu_oracle"] = cx_json(r.nu_oracle);
  j["nu_series"] = cx_json(r.nu_series);
  j["omitted_term_bound"] = r.omitted_term_bound;
  j["wronskian_defect"] = r.wronskian_defect;
  return j.dump();
}

std::string to_json(const WaveErrorReport& r) {
  nlohmann::json j;
  j["abs_err"] = r.abs_err;
  j["lambda"] = cx_json(r.lambda);
  j["residual"] = r.residual;
  j["steps"] = r.steps;
  return j.dump();
}

WaveErrorReport wavefunction_error(const std::function<Cx(Cx)>& log_psi,
                                   const std::function<Cx(Cx)>& dlog_psi, const PotentialFn& u,
                                   Cx lambda, const std::vector<Cx>& x_grid, double tol) {
  if (x_grid.size() < 2) throw std::invalid_argument("wavefunction_error: need a grid");

  Cx x0 = x_grid.front();
  Cx psi0 = std::exp(log_psi(x0));
  State s{psi0, dlog_psi(x0) * psi0, Cx(0.0), Cx(0.0)};

  double scale = 0.0;
  for (Cx x : x_grid) scale = std::max(scale, std::abs(std::exp(log_psi(x))));

  WaveErrorReport rep{lambda, 0.0, 0.0, 0};
  for (std::size_t i = 0; i + 1 < x_grid.size(); ++i) {
    rep.steps += integrate_segment(u, lambda, x_grid[i], x_grid[i + 1], s, tol);
    Cx x = x_grid[i + 1];
    rep.abs_err = std::max(rep.abs_err, std::abs(std::exp(log_psi(x)) - s[0]) / scale);
  }

  const double h = 1e-5;
  for (Cx x : x_grid) {
    Cx v = dlog_psi(x);
    Cx dv = (dlog_psi(x + h) - dlog_psi(x - h)) / (2.0 * h);
    Cx res = dv + v * v - (u(x) + lambda);
    rep.residual = std::max(rep.residual, std::abs(res));
  }
  return rep;
}

}  // namespace forge
