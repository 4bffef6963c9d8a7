#include "forge/riccati.hpp"

#include <stdexcept>

namespace forge {

ProblemId parse_problem_id(const std::string& name) {
  if (name == "mathieu-large") return ProblemId::mathieu_large;
  if (name == "mathieu-min0") return ProblemId::mathieu_min0;
  if (name == "mathieu-minpi2") return ProblemId::mathieu_minpi2;
  if (name == "lame-large") return ProblemId::lame_large;
  if (name == "lame-z0") return ProblemId::lame_z0;
  if (name == "lame-zK") return ProblemId::lame_zK;
  throw std::invalid_argument("unknown problem id: " + name);
}

const char* problem_id_name(ProblemId id) {
  switch (id) {
    case ProblemId::mathieu_large: return "mathieu-large";
    case ProblemId::mathieu_min0: return "mathieu-min0";
    case ProblemId::mathieu_minpi2: return "mathieu-minpi2";
    case ProblemId::lame_large: return "lame-large";
    case ProblemId::lame_z0: return "lame-z0";
    case ProblemId::lame_zK: return "lame-zK";
  }
  throw std::logic_error("bad problem id");
}

bool is_large_energy(ProblemId id) {
  return id == ProblemId::mathieu_large || id == ProblemId::lame_large;
}

SmallEnergyProblem small_energy_problem(ProblemId id, bool flip_branch) {
  SmallEnergyProblem pr;
  pr.id = id;
  ParamPoly one = ParamPoly::constant(1);
  switch (id) {
    case ProblemId::mathieu_min0:
      // u + lambda = 2h cos2x - 2h + delta = -4h sin^2 x + delta.
      pr.r_minus2 = JacobiElem::term(ParamPoly::constant(-4), 2, 0, 0, true);
      pr.r_zero = JacobiElem::constant(ParamPoly::param(Param::delta), true);
      pr.branch = JacobiElem::term(GaussRat(2) * GaussRat::unit_i() * one, 1, 0, 0, true);
      pr.spectral = Param::delta;
      pr.floquet = Param::nu;
      break;
    case ProblemId::mathieu_minpi2:
      // u + lambda = 2h cos2x + 2h + delta = 4h cos^2 x + delta.
      pr.r_minus2 = JacobiElem::term(ParamPoly::constant(4), 0, 2, 0, true);
      pr.r_zero = JacobiElem::constant(ParamPoly::param(Param::delta), true);
      pr.branch = JacobiElem::term(ParamPoly::constant(2), 0, 1, 0, true);
      pr.spectral = Param::delta;
      pr.floquet = Param::nu;
      break;
    case ProblemId::lame_z0:
      // u + Lambda = alpha k^2 sn^2 + Lambda, coupling g = sqrt(alpha).
      pr.r_minus2 = JacobiElem::term(ParamPoly::param(Param::k, 2), 2, 0, 0, false);
      pr.r_zero = JacobiElem::constant(ParamPoly::param(Param::Lambda), false);
      pr.branch = JacobiElem::term(ParamPoly::param(Param::k), 1, 0, 0, false);
      pr.spectral = Param::Lambda;
      pr.floquet = Param::mu;
      break;
    case ProblemId::lame_zK:
      // u - alpha k^2 + LambdaT = -alpha k^2 cn^2 + LambdaT; v = i sum w_l.
      pr.r_minus2 = JacobiElem::term(ParamPoly::param(Param::k, 2).scaled(GaussRat(-1)), 0, 2, 0, false);
      pr.r_zero = JacobiElem::constant(ParamPoly::param(Param::LambdaT), false);
      pr.branch = JacobiElem::term(ParamPoly::param(Param::k), 0, 1, 0, false);
      pr.i_prefactor = true;
      pr.spectral = Param::LambdaT;
      pr.floquet = Param::mu;
      break;
    default:
      throw std::invalid_argument("not a small-energy problem");
  }
  if (flip_branch) pr.branch = -pr.branch;
  return pr;
}

std::vector<JacobiElem> small_energy_chain(const SmallEnergyProblem& pr, int max_ell) {
  JacobiElem sq = pr.branch * pr.branch;
  JacobiElem want = pr.i_prefactor ? -pr.r_minus2 : pr.r_minus2;
  if (sq != want) throw std::logic_error("branch does not square to the leading right side");
  std::vector<JacobiElem> v;
  v.reserve(static_cast<size_t>(max_ell + 2));
  v.push_back(pr.branch);
  JacobiElem two_branch = pr.branch.scaled(GaussRat(2));
  for (int m = -1; m < max_ell; ++m) {
    const JacobiElem& vm = v[static_cast<size_t>(m + 1)];
    JacobiElem acc;
    if (pr.i_prefactor) {
      // i w_m' - 2 w_{-1} w_{m+1} - sum w_j w_k = r_m
      acc = vm.deriv().scaled(GaussRat::unit_i());
      if (m == 0) acc = acc - pr.r_zero;
    } else {
      // v_m' + 2 v_{-1} v_{m+1} + sum v_j v_k = r_m
      acc = -vm.deriv();
      if (m == 0) acc = acc + pr.r_zero;
    }
    for (int j = 0; j <= m; ++j)
      acc = acc - v[static_cast<size_t>(j + 1)] * v[static_cast<size_t>(m - j + 1)];
    v.push_back(acc.divided_by_term(two_branch));
  }
  return v;
}

}  // namespace forge
