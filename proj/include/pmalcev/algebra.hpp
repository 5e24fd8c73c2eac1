#pragma once

#include <cstddef>
#include <string>

#include "pmalcev/linalg.hpp"
#include "pmalcev/report.hpp"

namespace pmalcev {

enum class AlgebraKind { General, PreMalcevVerified, MalcevVerified };

/// Finite-dimensional algebra given by structure constants:
/// e_i . e_j = sum_k c(i,j,k) e_k.
struct Algebra {
  std::size_t dim = 0;
  Tensor3 c;
  AlgebraKind kind = AlgebraKind::General;

  Algebra() = default;
  explicit Algebra(std::size_t n) : dim(n), c(n) {}
};

Vec multiply(const Algebra& a, const Vec& x, const Vec& y);

/// The ten-term pre-Malcev expression PM(x,y,z,t); quadrilinear.
Vec pm_defect(const Algebra& a, const Vec& x, const Vec& y, const Vec& z,
              const Vec& t);

/// Scans all basis quadruples; quadrilinearity makes this complete.
CheckReport is_pre_malcev(const Algebra& a);

/// Commutator algebra: c'(i,j,k) = c(i,j,k) - c(j,i,k).
Algebra commutator_algebra(const Algebra& a);

/// Antisymmetry plus the Malcev identity. The identity is quadratic in its
/// repeated variable, so the scan polarizes: the repeated slot additionally
/// ranges over e_p + e_q for p < q.
CheckReport is_malcev(const Algebra& a);

Matrix left_mult(const Algebra& a, const Vec& x);
Matrix right_mult(const Algebra& a, const Vec& x);

/// The Malcev defect [[x,y],[x,z]] - [[[x,y],z],x] - [[[y,z],x],x]
/// - [[[z,x],x],y] of an anticommutative algebra.
Vec malcev_defect(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);

}  // namespace pmalcev
