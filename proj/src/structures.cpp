#include "pmalcev/structures.hpp"

#include "pmalcev/errors.hpp"

namespace pmalcev {

namespace {

bool intertwines(const ONStructure& x) {
  return x.n * x.t.map == x.t.map * x.s;
}

Vec deformed_value(const Algebra& a, const Matrix& n, const Vec& x,
                   const Vec& y) {
  Vec out = vec_add(multiply(a, n.apply(x), y), multiply(a, x, n.apply(y)));
  return vec_sub(out, n.apply(multiply(a, x, y)));
}

}  // namespace

Vec deformed_bracket_S(const OOperatorCandidate& t, const Matrix& s,
                       const Vec& u, const Vec& v) {
  if (s.rows() != t.bimodule.vdim || s.cols() != t.bimodule.vdim)
    throw DimensionMismatch("module operator must be square of the module dim");
  Vec out = vec_add(diamond(t, s.apply(u), v), diamond(t, u, s.apply(v)));
  return vec_sub(out, s.apply(diamond(t, u, v)));
}

std::vector<StructureDefect> on_structure_defects(const ONStructure& x) {
  const std::size_t n = x.t.bimodule.base.dim;
  const std::size_t m = x.t.bimodule.vdim;
  if (x.n.rows() != n || x.n.cols() != n || x.s.rows() != m || x.s.cols() != m)
    throw DimensionMismatch("structure shapes do not match bimodule");
  std::vector<StructureDefect> out;

  CheckReport op = is_o_operator(x.t);
  if (!op.passed()) out.push_back({"o-operator", op.witness});

  const NijenhuisPair pair{x.n, x.s, x.t.bimodule};
  const auto pair_defects = x.flavor == PairFlavor::NijenhuisPair
                                ? nijenhuis_pair_defects(pair)
                                : dual_nijenhuis_pair_defects(pair);
  if (!pair_defects.empty()) out.push_back({"pair", pair_defects.front().where});

  const Matrix mismatch = x.n * x.t.map - x.t.map * x.s;
  if (!mismatch.is_zero()) {
    for (std::size_t i = 0; i < mismatch.rows(); ++i)
      for (std::size_t j = 0; j < mismatch.cols(); ++j)
        if (mismatch.at(i, j) != 0) {
          out.push_back({"intertwining", {i, j}});
          i = mismatch.rows();
          break;
        }
  }

  const OOperatorCandidate nt{x.n * x.t.map, x.t.bimodule};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec u = basis_vec(m, i), v = basis_vec(m, j);
      if (!vec_is_zero(
              vec_sub(diamond(nt, u, v), deformed_bracket_S(x.t, x.s, u, v)))) {
        out.push_back({"diamond", {i, j}});
        return out;
      }
    }
  return out;
}

CheckReport prop42_check(const ONStructure& x) {
  if (!on_structure_defects(x).empty())
    throw NotONStructure("a verified structure is required");
  return is_nijenhuis(induced_product(x.t), x.s);
}

CheckReport compose_check(const ONStructure& x) {
  if (!on_structure_defects(x).empty())
    throw NotONStructure("a verified structure is required");
  return is_o_operator({x.n * x.t.map, x.t.bimodule});
}

CheckReport theorem15_check(const ONStructure& x) {
  if (x.flavor != PairFlavor::NijenhuisPair)
    throw NotONStructure("a pair-flavor structure is required");
  if (!on_structure_defects(x).empty())
    throw NotONStructure("a verified structure is required");
  if (!x.t.map.is_square())
    throw SingularMatrix("operator must be square to be invertible");
  (void)x.t.map.inverse();  // SingularMatrix when not invertible
  ONStructure dual = x;
  dual.flavor = PairFlavor::DualNijenhuisPair;
  auto defects = on_structure_defects(dual);
  if (defects.empty()) return CheckReport::pass();
  return CheckReport::fail(defects.front().where, {},
                           "dual-flavor condition " + defects.front().kind +
                               " fails");
}

CheckReport prop45_check(const Algebra& a, const OOperatorCandidate& t,
                         const Matrix& n) {
  if (!is_o_operator(t).passed())
    throw NotAnOOperator("an O-operator is required");
  if (!is_nijenhuis(a, n).passed())
    throw NotNijenhuis("a Nijenhuis operator is required");
  const std::size_t m = t.bimodule.vdim;
  const OOperatorCandidate nt{n * t.map, t.bimodule};
  const bool lhs = is_o_operator(nt).passed();
  bool rhs = true;
  for (std::size_t i = 0; i < m && rhs; ++i)
    for (std::size_t j = 0; j < m && rhs; ++j) {
      const Vec u = basis_vec(m, i), v = basis_vec(m, j);
      const Vec tu = t.map.apply(u), tv = t.map.apply(v);
      const Vec ntu = nt.map.apply(u), ntv = nt.map.apply(v);
      Vec left = n.apply(vec_add(multiply(a, ntu, tv), multiply(a, tu, ntv)));
      Vec inner = vec_add(t.map.apply(diamond(nt, u, v)),
                          nt.map.apply(diamond(t, u, v)));
      if (!vec_is_zero(vec_sub(left, n.apply(inner)))) rhs = false;
    }
  if (lhs != rhs)
    return CheckReport::error("the two evaluation paths disagree");
  if (lhs) {
    bool invertible = true;
    try {
      (void)n.inverse();
    } catch (const SingularMatrix&) {
      invertible = false;
    }
    if (invertible && !are_compatible(t, nt).passed())
      return CheckReport::error("compatibility consequence fails");
    return CheckReport::pass_with_note("both paths: composite is an O-operator");
  }
  return CheckReport::pass_with_note(
      "both paths: composite is not an O-operator");
}

HierarchyResult hierarchy(const ONStructure& x, unsigned kmax) {
  if (!on_structure_defects(x).empty())
    throw NotONStructure("a verified structure is required");
  HierarchyResult res;
  Matrix tk = x.t.map;
  res.operators.push_back(tk);
  for (unsigned k = 1; k <= kmax; ++k) {
    tk = x.n * tk;
    res.operators.push_back(tk);
  }
  for (unsigned k = 0; k <= kmax; ++k) {
    std::vector<CheckReport> row;
    for (unsigned l = 0; l <= kmax; ++l)
      row.push_back(are_compatible({res.operators[k], x.t.bimodule},
                                   {res.operators[l], x.t.bimodule}));
    res.compat.push_back(std::move(row));
  }
  res.ladder = CheckReport::pass();
  const std::size_t m = x.t.bimodule.vdim;
  const Algebra& a = x.t.bimodule.base;
  for (unsigned k = 0; k <= kmax; ++k)
    for (unsigned i = 0; k + i <= kmax; ++i) {
      const Matrix& tkm = res.operators[k];
      const Matrix ski = x.s.pow(k + i);
      const Matrix ni = x.n.pow(i);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
          const Vec u = basis_vec(m, p), v = basis_vec(m, q);
          Vec lhs = tkm.apply(deformed_bracket_S(x.t, ski, u, v));
          Vec rhs = deformed_value(a, ni, tkm.apply(u), tkm.apply(v));
          if (!vec_is_zero(vec_sub(lhs, rhs))) {
            res.ladder = CheckReport::fail({k, i, p, q}, {},
                                           "ladder identity fails");
            return res;
          }
        }
    }
  return res;
}

std::pair<ONStructure, ONStructure> from_compatible_pair(
    const OOperatorCandidate& t1, const OOperatorCandidate& t2) {
  if (!is_o_operator(t1).passed() || !is_o_operator(t2).passed())
    throw NotAnOOperator("both operators must be verified O-operators");
  if (!are_compatible(t1, t2).passed())
    throw NotCompatible("the operators are not compatible");
  if (!t2.map.is_square())
    throw DimensionMismatch("second operator must be square to be invertible");
  const Matrix t2inv = t2.map.inverse();
  const Matrix n = t1.map * t2inv;
  const Matrix s = t2inv * t1.map;
  ONStructure first{t1, n, s, PairFlavor::DualNijenhuisPair};
  ONStructure second{t2, n, s, PairFlavor::DualNijenhuisPair};
  if (!on_structure_defects(first).empty() ||
      !on_structure_defects(second).empty())
    throw NotONStructure("constructed triples fail verification");
  return {first, second};
}

CheckReport rn_structure_check(const Algebra& a, const Tensor2& r,
                               const Matrix& n) {
  if (!is_symmetric(r)) throw NotSymmetric("tensor must be symmetric");
  const Bimodule bim = dual_bimodule(regular_bimodule(a));
  const OOperatorCandidate rsharp{t_from_r(r), bim};
  if (!is_o_operator(rsharp).passed())
    throw NotSolution("tensor is not a solution");
  const std::size_t m = a.dim;
  const Matrix nstar = dual_map(n);
  // direct definition
  bool direct = is_nijenhuis(a, n).passed();
  direct = direct && n * rsharp.map == rsharp.map * nstar;
  if (direct) {
    const OOperatorCandidate composite{n * rsharp.map, bim};
    for (std::size_t i = 0; i < m && direct; ++i)
      for (std::size_t j = 0; j < m && direct; ++j) {
        const Vec u = basis_vec(m, i), v = basis_vec(m, j);
        if (!vec_is_zero(vec_sub(diamond(composite, u, v),
                                 deformed_bracket_S(rsharp, nstar, u, v))))
          direct = false;
      }
  }
  // reduction path
  const ONStructure reduced{rsharp, n, nstar, PairFlavor::DualNijenhuisPair};
  const bool reduction = on_structure_defects(reduced).empty();
  if (direct != reduction)
    return CheckReport::error("the two evaluation paths disagree");
  if (direct) return CheckReport::pass();
  return CheckReport::fail({}, {}, "both paths: conditions fail");
}

CheckReport pseudo_hessian_check(const Algebra& a, const Matrix& b) {
  if (b.rows() != a.dim || b.cols() != a.dim)
    throw DimensionMismatch("form must be square of the algebra dimension");
  if (!b.is_symmetric()) throw NotSymmetric("form must be symmetric");
  const std::size_t dim = a.dim;
  auto bval = [&](const Vec& x, const Vec& y) {
    Scalar acc = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) acc += x[i] * y[j] * b.at(i, j);
    }
    return acc;
  };
  bool invertible = true;
  Matrix binv;
  try {
    binv = b.inverse();
  } catch (const SingularMatrix&) {
    invertible = false;
  }
  bool cocycle = true;
  std::vector<std::size_t> witness;
  for (std::size_t i = 0; i < dim && cocycle; ++i)
    for (std::size_t j = 0; j < dim && cocycle; ++j)
      for (std::size_t k = 0; k < dim && cocycle; ++k) {
        const Vec x = basis_vec(dim, i), y = basis_vec(dim, j),
                  z = basis_vec(dim, k);
        const Scalar lhs = bval(multiply(a, x, y), z) - bval(x, multiply(a, y, z));
        const Scalar rhs = bval(multiply(a, y, x), z) - bval(y, multiply(a, x, z));
        if (lhs != rhs) {
          cocycle = false;
          witness = {i, j, k};
        }
      }
  const bool direct = invertible && cocycle;
  const bool reduction =
      invertible &&
      is_o_operator({binv, dual_bimodule(regular_bimodule(a))}).passed();
  if (direct != reduction)
    return CheckReport::error("the two evaluation paths disagree");
  if (direct) return CheckReport::pass();
  if (!invertible) return CheckReport::fail({}, {}, "form is degenerate");
  return CheckReport::fail(witness, {}, "cocycle identity fails");
}

CheckReport bn_structure_check(const Algebra& a, const Matrix& b,
                               const Matrix& n) {
  CheckReport hess = pseudo_hessian_check(a, b);
  if (!hess.passed())
    throw NotPseudoHessian("a pseudo-Hessian form is required");
  if (!is_nijenhuis(a, n).passed())
    throw NotNijenhuis("a Nijenhuis operator is required");
  const std::size_t dim = a.dim;
  auto bval = [&](const Vec& x, const Vec& y) {
    Scalar acc = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) acc += x[i] * y[j] * b.at(i, j);
    }
    return acc;
  };
  bool direct = n.transpose() * b == b * n;
  for (std::size_t i = 0; i < dim && direct; ++i)
    for (std::size_t j = 0; j < dim && direct; ++j)
      for (std::size_t k = 0; k < dim && direct; ++k) {
        const Vec x = basis_vec(dim, i), y = basis_vec(dim, j),
                  z = basis_vec(dim, k);
        const Vec nz = n.apply(z);
        const Scalar lhs =
            bval(multiply(a, x, y), nz) - bval(x, n.apply(multiply(a, y, z)));
        const Scalar rhs =
            bval(multiply(a, y, x), nz) - bval(y, n.apply(multiply(a, x, z)));
        if (lhs != rhs) direct = false;
      }
  const ONStructure reduced{{b.inverse(), dual_bimodule(regular_bimodule(a))},
                            n,
                            dual_map(n),
                            PairFlavor::DualNijenhuisPair};
  const bool reduction = on_structure_defects(reduced).empty();
  if (direct != reduction)
    return CheckReport::error("the two evaluation paths disagree");
  if (direct) return CheckReport::pass();
  return CheckReport::fail({}, {}, "both paths: conditions fail");
}

CheckReport bn_roundtrip(const Algebra& a, const Matrix& b, const Matrix& n) {
  CheckReport bn = bn_structure_check(a, b, n);
  if (!bn.passed()) return bn;
  const Matrix r1 = b.inverse();
  const Matrix r2 = n.inverse() * r1;  // SingularMatrix when n degenerate
  if (!r1.is_symmetric() || !r2.is_symmetric())
    return CheckReport::fail({}, {}, "reconstructed tensors are not symmetric");
  if (!cybe_residual(a, r1).is_zero() || !cybe_residual(a, r2).is_zero())
    return CheckReport::fail({}, {}, "reconstructed tensors are not solutions");
  const Bimodule bim = dual_bimodule(regular_bimodule(a));
  if (!are_compatible({r1, bim}, {r2, bim}).passed())
    return CheckReport::fail({}, {}, "reconstructed operators not compatible");
  if (!(r1 * r2.inverse() == n))
    return CheckReport::fail({}, {}, "operator is not recovered");
  if (!(r1.inverse() == b))
    return CheckReport::fail({}, {}, "form is not recovered");
  return CheckReport::pass();
}

}  // namespace pmalcev
