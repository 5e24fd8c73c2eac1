#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pmalcev/algebra.hpp"

namespace pmalcev {

/// Two families of actions on an m-dimensional space V:
/// ell[i] = the action of e_i from the left, rr[i] = from the right.
/// Both extend linearly in the algebra argument.
struct Bimodule {
  Algebra base;
  std::size_t vdim = 0;
  std::vector<Matrix> ell;
  std::vector<Matrix> rr;
};

/// Linear extensions: ell_of(B, x) = sum_i x_i ell[i], and likewise rr_of.
Matrix ell_of(const Bimodule& b, const Vec& x);
Matrix rr_of(const Bimodule& b, const Vec& x);

/// One nonzero operator identity, evaluated at a basis triple.
struct BimoduleDefect {
  std::string axiom;  // "B1".."B4"
  std::size_t i = 0, j = 0, k = 0;
  Matrix defect;
};

/// Evaluates all four operator identities on all basis triples; empty result
/// means (V; ell, rr) is a bimodule.
std::vector<BimoduleDefect> bimodule_defects(const Bimodule& b);

/// (A, L, R): the algebra acting on itself.
Bimodule regular_bimodule(const Algebra& a);

/// (V*, ell* - rr*, -rr*) with the sign convention
/// <ell*_x(xi), v> = -<xi, ell_x(v)>; concretely
/// ell'[i] = -ell[i]^T + rr[i]^T and rr'[i] = rr[i]^T.
Bimodule dual_bimodule(const Bimodule& b);

/// Semi-direct product on basis order (algebra first, then module):
/// (x,u).(y,v) = (x.y, ell_x(v) + rr_y(u)).
Algebra semidirect(const Bimodule& b);

/// Representation check for an anticommutative algebra via the semi-direct
/// characterization: the bracket [(x,u),(y,v)] = ([x,y], rho_x v - rho_y u)
/// on M (+) V must satisfy the Malcev identity.
CheckReport malcev_rep_check(const Algebra& m, const std::vector<Matrix>& rho);

}  // namespace pmalcev
