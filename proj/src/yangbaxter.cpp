#include "pmalcev/yangbaxter.hpp"

#include "pmalcev/errors.hpp"

namespace pmalcev {

bool is_symmetric(const Tensor2& r) { return r.is_symmetric(); }

Tensor3 cybe_residual(const Algebra& alg, const Tensor2& r) {
  if (r.rows() != alg.dim || r.cols() != alg.dim)
    throw DimensionMismatch("tensor dimension does not match algebra");
  const std::size_t n = alg.dim;
  Tensor3 res(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (r.at(a, b) == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (r.at(c, d) == 0) continue;
          const Scalar coef = r.at(a, b) * r.at(c, d);
          for (std::size_t k = 0; k < n; ++k) {
            // -r12.r13 contributes -(e_a . e_c) (x) e_b (x) e_d
            const Scalar& ac = alg.c.at(a, c, k);
            if (ac != 0) res.at(k, b, d) -= coef * ac;
            // +r12.r23 contributes e_a (x) (e_b . e_c) (x) e_d
            const Scalar& bc = alg.c.at(b, c, k);
            if (bc != 0) res.at(a, k, d) += coef * bc;
            // +[r13, r23] contributes e_a (x) e_c (x) [e_b, e_d]
            const Scalar br = alg.c.at(b, d, k) - alg.c.at(d, b, k);
            if (br != 0) res.at(a, c, k) += coef * br;
          }
        }
    }
  return res;
}

Matrix t_from_r(const Tensor2& r) { return r; }

CheckReport theorem11_check(const Algebra& a, const Tensor2& r) {
  if (!is_symmetric(r)) throw NotSymmetric("tensor must be symmetric");
  const bool solution = cybe_residual(a, r).is_zero();
  OOperatorCandidate cand{t_from_r(r), dual_bimodule(regular_bimodule(a))};
  const bool operator_side = is_o_operator(cand).passed();
  if (solution != operator_side)
    return CheckReport::error("the two evaluation paths disagree");
  if (solution)
    return CheckReport::pass_with_note("both paths: solution");
  return CheckReport::fail({}, {}, "both paths: not a solution");
}

std::pair<Algebra, Tensor2> lift_o_operator(const OOperatorCandidate& t) {
  const std::size_t n = t.bimodule.base.dim;
  const std::size_t m = t.bimodule.vdim;
  if (t.map.rows() != n || t.map.cols() != m)
    throw DimensionMismatch("operator shape does not match bimodule");
  Algebra ambient = semidirect(dual_bimodule(t.bimodule));
  Tensor2 s(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      s.at(i, n + j) = t.map.at(i, j);
      s.at(n + j, i) = t.map.at(i, j);
    }
  return {ambient, s};
}

CheckReport theorem12_check(const OOperatorCandidate& t) {
  const bool operator_side = is_o_operator(t).passed();
  auto [ambient, s] = lift_o_operator(t);
  const bool solution = cybe_residual(ambient, s).is_zero();
  if (solution != operator_side)
    return CheckReport::error("the two evaluation paths disagree");
  if (solution)
    return CheckReport::pass_with_note("both paths: O-operator / solution");
  return CheckReport::fail({}, {}, "both paths: not an O-operator / solution");
}

BilinearEquivalences bilinear_equivalences(const Algebra& a, const Matrix& t) {
  if (t.rows() != a.dim || t.cols() != a.dim)
    throw DimensionMismatch("operator must be square of the algebra dimension");
  const Matrix tinv = t.inverse();  // throws SingularMatrix when degenerate
  const std::size_t n = a.dim;
  // B(e_i, e_j) = <T^{-1}(e_i), e_j>
  Matrix bform(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bform.at(i, j) = tinv.at(j, i);
  auto bval = [&](const Vec& x, const Vec& y) {
    Scalar acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) acc += x[i] * y[j] * bform.at(i, j);
    }
    return acc;
  };

  BilinearEquivalences out;
  const Bimodule reg = regular_bimodule(a);
  const Bimodule dual_reg = dual_bimodule(reg);

  // case 1: bimodule (A*, L*-R*, 0)
  Bimodule case1_bim = dual_reg;
  for (std::size_t i = 0; i < n; ++i) case1_bim.rr[i] = Matrix(n, n);
  out.case1.lhs = is_o_operator({t, case1_bim}).passed();

  // case 2: the dual regular bimodule
  out.case2.lhs = is_o_operator({t, dual_reg}).passed();

  // case 3: Malcev operator identity on the commutator algebra with L*:
  // [T(xi), T(eta)] = T(L*_{T(xi)}(eta) - L*_{T(eta)}(xi))
  const Algebra comm = commutator_algebra(a);
  out.case3.lhs = true;
  for (std::size_t i = 0; i < n && out.case3.lhs; ++i)
    for (std::size_t j = 0; j < n && out.case3.lhs; ++j) {
      const Vec xi = basis_vec(n, i), eta = basis_vec(n, j);
      const Vec txi = t.apply(xi), teta = t.apply(eta);
      Vec lhs = multiply(comm, txi, teta);
      const Matrix lstar_txi = -left_mult(a, txi).transpose();
      const Matrix lstar_teta = -left_mult(a, teta).transpose();
      Vec rhs = t.apply(vec_sub(lstar_txi.apply(eta), lstar_teta.apply(xi)));
      if (!vec_is_zero(vec_sub(lhs, rhs))) out.case3.lhs = false;
    }

  out.case1.rhs = out.case2.rhs = out.case3.rhs = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
        const Vec xy = multiply(a, x, y), xz = multiply(a, x, z);
        const Vec yz = multiply(a, y, z), zx = multiply(a, z, x);
        const Vec zy = multiply(a, z, y);
        // B(x.y, z) = -B(y, x.z - z.x)
        if (bval(xy, z) != -bval(y, vec_sub(xz, zx))) out.case1.rhs = false;
        // B(x.y, z) = -B(y, x.z) + B(y, z.x) + B(x, z.y)
        if (bval(xy, z) != -bval(y, xz) + bval(y, zx) + bval(x, zy))
          out.case2.rhs = false;
        // B([x,y], z) = B(x, y.z) + B(y, x.z)
        if (bval(vec_sub(xy, multiply(a, y, x)), z) != bval(x, yz) + bval(y, xz))
          out.case3.rhs = false;
      }
  return out;
}

}  // namespace pmalcev
