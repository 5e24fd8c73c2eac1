#pragma once

#include <utility>

#include "pmalcev/operator.hpp"

namespace pmalcev {

bool is_symmetric(const Tensor2& r);

/// The value of -r12.r13 + r12.r23 + [r13, r23] as a cubical tensor; r is a
/// solution exactly when this vanishes.
Tensor3 cybe_residual(const Algebra& a, const Tensor2& r);

/// T_r : A* -> A with <f, T_r(g)> = <f (x) g, r>; in dual bases the matrix of
/// T_r is the entry matrix of r.
Matrix t_from_r(const Tensor2& r);

/// Computes the residual of r and, independently, the operator defect of T_r
/// against (A*, L*-R*, -R*); the two booleans must agree.
CheckReport theorem11_check(const Algebra& a, const Tensor2& r);

/// Ambient semi-direct algebra over the dual of T's bimodule, together with
/// the symmetric lift s_T whose only nonzero blocks are the two transposed
/// copies of T's matrix.
std::pair<Algebra, Tensor2> lift_o_operator(const OOperatorCandidate& t);

/// Operator identity for T versus vanishing residual of s_T on the ambient
/// algebra; both evaluated independently and required to agree.
CheckReport theorem12_check(const OOperatorCandidate& t);

struct BilinearCase {
  bool lhs = false;  // operator-side membership
  bool rhs = false;  // bilinear-form identity
};

struct BilinearEquivalences {
  BilinearCase case1;  // (A*, L*-R*, 0)
  BilinearCase case2;  // (A*, L*-R*, -R*)
  BilinearCase case3;  // Malcev operator for (A*, L*)
};

/// For invertible T with B(x,y) = <T^{-1}(x), y>, evaluates both sides of
/// each of the three equivalences on all basis tuples.
BilinearEquivalences bilinear_equivalences(const Algebra& a, const Matrix& t);

}  // namespace pmalcev
