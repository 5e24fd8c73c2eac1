#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pmalcev/bimodule.hpp"

namespace pmalcev {

/// Candidate T : V -> A against a fixed bimodule; map has shape
/// base.dim x vdim.
struct OOperatorCandidate {
  Matrix map;
  Bimodule bimodule;
};

/// LHS - RHS of T(u).T(v) = T(ell_{T(u)}(v) + rr_{T(v)}(u)); bilinear.
Vec o_defect(const OOperatorCandidate& t, const Vec& u, const Vec& v);

CheckReport is_o_operator(const OOperatorCandidate& t);

/// Weight-zero Rota-Baxter: the regular-bimodule case.
CheckReport is_rota_baxter(const Algebra& a, const Matrix& r);

/// (V, <>^T) with u <>^T v = ell_{T(u)}(v) + rr_{T(v)}(u). Requires T to be
/// an O-operator; throws NotAnOOperator otherwise.
Algebra induced_product(const OOperatorCandidate& t);

/// The induced product of a candidate without the O-operator precondition.
Vec diamond(const OOperatorCandidate& t, const Vec& u, const Vec& v);

/// LHS - RHS of the mixed compatibility identity
/// T1(u).T2(v) + T2(u).T1(v)
///   = T1(ell_{T2(u)}(v) + rr_{T2(v)}(u)) + T2(ell_{T1(u)}(v) + rr_{T1(v)}(u)).
Vec compat_defect(const OOperatorCandidate& t1, const OOperatorCandidate& t2,
                  const Vec& u, const Vec& v);

CheckReport are_compatible(const OOperatorCandidate& t1,
                           const OOperatorCandidate& t2);

/// LHS - RHS of N(x).N(y) = N(N(x).y + x.N(y) - N(x.y)); bilinear.
Vec nijenhuis_defect(const Algebra& a, const Matrix& n, const Vec& x,
                     const Vec& y);

CheckReport is_nijenhuis(const Algebra& a, const Matrix& n);

/// (A, ._N) with x ._N y = N(x).y + x.N(y) - N(x.y). Requires N Nijenhuis;
/// throws NotNijenhuis otherwise.
Algebra deformed_product(const Algebra& a, const Matrix& n);

/// The deformed product without the Nijenhuis precondition.
Algebra deformed_product_unchecked(const Algebra& a, const Matrix& n);

struct NijenhuisPair {
  Matrix n;  // base.dim x base.dim
  Matrix s;  // vdim x vdim
  Bimodule bimodule;
};

/// One violated pair condition. id is "nijenhuis" (defect of N at the basis
/// pair `where`), or "ell"/"rr" (operator defect at basis index where[0]).
struct PairDefect {
  std::string id;
  std::vector<std::size_t> where;
  Matrix defect;
};

/// Nijenhuis-pair conditions:
/// ell_{N(x)} S = S (ell_{N(x)} + ell_x S - S ell_x), and the rr analogue.
std::vector<PairDefect> nijenhuis_pair_defects(const NijenhuisPair& p);

/// Dual pair conditions:
/// ell_{N(x)} S = S ell_{N(x)} + ell_x S^2 - S ell_x S, and the rr analogue.
std::vector<PairDefect> dual_nijenhuis_pair_defects(const NijenhuisPair& p);

/// Pair conditions plus S^2 ell_x + ell_x S^2 = 2 S ell_x S (and rr analogue).
CheckReport is_perfect_pair(const NijenhuisPair& p);

struct PairSumResult {
  Algebra semi;
  Matrix sum;  // block-diagonal N (+) S
  CheckReport check;
};

/// Builds the semi-direct algebra and verifies that N (+) S is Nijenhuis on
/// it. Requires p to pass nijenhuis_pair_defects; throws NotNijenhuisPair.
PairSumResult pair_sum_nijenhuis(const NijenhuisPair& p);

struct DeformationData {
  Tensor3 omega;
  std::vector<Matrix> varpi_ell;
  std::vector<Matrix> varpi_rr;
};

/// omega(x,y) = N(x).y + x.N(y) - N(x.y),
/// varpi_ell(x) = ell_{N(x)} + ell_x S - S ell_x, and the rr analogue.
DeformationData deformation_from_pair(const NijenhuisPair& p);

/// For each sample t, builds the deformed algebra and actions and checks
/// both the pre-Malcev identity and the bimodule axioms. The defects are
/// polynomials of degree at most 3 in t, so 5 distinct samples certify the
/// identity; fewer throw TooFewSamples.
CheckReport deformation_check(const Bimodule& b, const DeformationData& d,
                              const std::vector<Scalar>& t_samples);

/// The six identities characterizing a trivial deformation via (N, S).
CheckReport triviality_check(const NijenhuisPair& p, const DeformationData& d);

struct MalcevRBTools {
  CheckReport rb_check;
  CheckReport nij_check;
  Algebra induced;          // x .^R y = [R(x), y]
  Algebra deformed_bracket;  // [x,y]_N
  CheckReport prop_check;
};

/// Rota-Baxter / Nijenhuis toolkit on an anticommutative Malcev algebra.
/// prop_check verifies, whenever R and N commute and both base checks pass,
/// that R stays Rota-Baxter for [-,-]_N and N stays Nijenhuis for .^R.
MalcevRBTools malcev_rb_tools(const Algebra& m, const Matrix& r,
                              const Matrix& n);

}  // namespace pmalcev
