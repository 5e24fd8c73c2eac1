#include "pmalcev/operator.hpp"

#include "pmalcev/errors.hpp"
#include "pmalcev/scalar.hpp"

namespace pmalcev {

namespace {

std::vector<std::string> format_vec(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Scalar& x : v) out.push_back(format_scalar(x));
  return out;
}

void check_candidate_shape(const OOperatorCandidate& t) {
  if (t.map.rows() != t.bimodule.base.dim || t.map.cols() != t.bimodule.vdim)
    throw DimensionMismatch("operator shape does not match bimodule");
}

void check_pair_shape(const NijenhuisPair& p) {
  if (p.n.rows() != p.bimodule.base.dim || p.n.cols() != p.bimodule.base.dim ||
      p.s.rows() != p.bimodule.vdim || p.s.cols() != p.bimodule.vdim)
    throw DimensionMismatch("pair shapes do not match bimodule");
}

Matrix blockdiag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

}  // namespace

Vec diamond(const OOperatorCandidate& t, const Vec& u, const Vec& v) {
  check_candidate_shape(t);
  const Vec tu = t.map.apply(u);
  const Vec tv = t.map.apply(v);
  return vec_add(ell_of(t.bimodule, tu).apply(v),
                 rr_of(t.bimodule, tv).apply(u));
}

Vec o_defect(const OOperatorCandidate& t, const Vec& u, const Vec& v) {
  check_candidate_shape(t);
  const Vec tu = t.map.apply(u);
  const Vec tv = t.map.apply(v);
  const Vec lhs = multiply(t.bimodule.base, tu, tv);
  return vec_sub(lhs, t.map.apply(diamond(t, u, v)));
}

CheckReport is_o_operator(const OOperatorCandidate& t) {
  check_candidate_shape(t);
  const std::size_t m = t.bimodule.vdim;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec d = o_defect(t, basis_vec(m, i), basis_vec(m, j));
      if (!vec_is_zero(d))
        return CheckReport::fail({i, j}, format_vec(d),
                                 "O-operator identity fails");
    }
  return CheckReport::pass();
}

CheckReport is_rota_baxter(const Algebra& a, const Matrix& r) {
  if (r.rows() != a.dim || r.cols() != a.dim)
    throw DimensionMismatch("operator must be square of the algebra dimension");
  return is_o_operator({r, regular_bimodule(a)});
}

Algebra induced_product(const OOperatorCandidate& t) {
  CheckReport check = is_o_operator(t);
  if (!check.passed())
    throw NotAnOOperator("induced product requires a verified O-operator");
  const std::size_t m = t.bimodule.vdim;
  Algebra out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec prod = diamond(t, basis_vec(m, i), basis_vec(m, j));
      for (std::size_t k = 0; k < m; ++k) out.c.at(i, j, k) = prod[k];
    }
  return out;
}

Vec compat_defect(const OOperatorCandidate& t1, const OOperatorCandidate& t2,
                  const Vec& u, const Vec& v) {
  check_candidate_shape(t1);
  check_candidate_shape(t2);
  if (t1.bimodule.base.dim != t2.bimodule.base.dim ||
      t1.bimodule.vdim != t2.bimodule.vdim ||
      !(t1.bimodule.base.c == t2.bimodule.base.c))
    throw BimoduleMismatch("operators must share a bimodule");
  for (std::size_t i = 0; i < t1.bimodule.base.dim; ++i)
    if (!(t1.bimodule.ell[i] == t2.bimodule.ell[i]) ||
        !(t1.bimodule.rr[i] == t2.bimodule.rr[i]))
      throw BimoduleMismatch("operators must share a bimodule");
  const Vec t1u = t1.map.apply(u), t1v = t1.map.apply(v);
  const Vec t2u = t2.map.apply(u), t2v = t2.map.apply(v);
  const Algebra& a = t1.bimodule.base;
  Vec lhs = vec_add(multiply(a, t1u, t2v), multiply(a, t2u, t1v));
  Vec rhs = vec_add(t1.map.apply(vec_add(ell_of(t1.bimodule, t2u).apply(v),
                                         rr_of(t1.bimodule, t2v).apply(u))),
                    t2.map.apply(vec_add(ell_of(t1.bimodule, t1u).apply(v),
                                         rr_of(t1.bimodule, t1v).apply(u))));
  return vec_sub(lhs, rhs);
}

CheckReport are_compatible(const OOperatorCandidate& t1,
                           const OOperatorCandidate& t2) {
  const std::size_t m = t1.bimodule.vdim;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec d = compat_defect(t1, t2, basis_vec(m, i), basis_vec(m, j));
      if (!vec_is_zero(d))
        return CheckReport::fail({i, j}, format_vec(d),
                                 "compatibility identity fails");
    }
  return CheckReport::pass();
}

Vec nijenhuis_defect(const Algebra& a, const Matrix& n, const Vec& x,
                     const Vec& y) {
  if (n.rows() != a.dim || n.cols() != a.dim)
    throw DimensionMismatch("operator must be square of the algebra dimension");
  const Vec nx = n.apply(x), ny = n.apply(y);
  Vec lhs = multiply(a, nx, ny);
  Vec inner = vec_add(multiply(a, nx, y), multiply(a, x, ny));
  inner = vec_sub(inner, n.apply(multiply(a, x, y)));
  return vec_sub(lhs, n.apply(inner));
}

CheckReport is_nijenhuis(const Algebra& a, const Matrix& n) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec d = nijenhuis_defect(a, n, basis_vec(a.dim, i), basis_vec(a.dim, j));
      if (!vec_is_zero(d))
        return CheckReport::fail({i, j}, format_vec(d),
                                 "Nijenhuis identity fails");
    }
  return CheckReport::pass();
}

Algebra deformed_product_unchecked(const Algebra& a, const Matrix& n) {
  Algebra out(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const Vec x = basis_vec(a.dim, i), y = basis_vec(a.dim, j);
      Vec prod = vec_add(multiply(a, n.apply(x), y), multiply(a, x, n.apply(y)));
      prod = vec_sub(prod, n.apply(multiply(a, x, y)));
      for (std::size_t k = 0; k < a.dim; ++k) out.c.at(i, j, k) = prod[k];
    }
  return out;
}

Algebra deformed_product(const Algebra& a, const Matrix& n) {
  if (!is_nijenhuis(a, n).passed())
    throw NotNijenhuis("deformed product requires a Nijenhuis operator");
  return deformed_product_unchecked(a, n);
}

std::vector<PairDefect> nijenhuis_pair_defects(const NijenhuisPair& p) {
  check_pair_shape(p);
  std::vector<PairDefect> out;
  const Algebra& a = p.bimodule.base;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec d = nijenhuis_defect(a, p.n, basis_vec(a.dim, i),
                               basis_vec(a.dim, j));
      if (!vec_is_zero(d)) {
        Matrix col(a.dim, 1);
        for (std::size_t k = 0; k < a.dim; ++k) col.at(k, 0) = d[k];
        out.push_back({"nijenhuis", {i, j}, col});
      }
    }
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Vec x = basis_vec(a.dim, i);
    const Vec nx = p.n.apply(x);
    const Matrix lx = ell_of(p.bimodule, x), lnx = ell_of(p.bimodule, nx);
    const Matrix rx = rr_of(p.bimodule, x), rnx = rr_of(p.bimodule, nx);
    Matrix dl = lnx * p.s - p.s * (lnx + lx * p.s - p.s * lx);
    if (!dl.is_zero()) out.push_back({"ell", {i}, dl});
    Matrix dr = rnx * p.s - p.s * (rnx + rx * p.s - p.s * rx);
    if (!dr.is_zero()) out.push_back({"rr", {i}, dr});
  }
  return out;
}

std::vector<PairDefect> dual_nijenhuis_pair_defects(const NijenhuisPair& p) {
  check_pair_shape(p);
  std::vector<PairDefect> out;
  const Algebra& a = p.bimodule.base;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec d = nijenhuis_defect(a, p.n, basis_vec(a.dim, i),
                               basis_vec(a.dim, j));
      if (!vec_is_zero(d)) {
        Matrix col(a.dim, 1);
        for (std::size_t k = 0; k < a.dim; ++k) col.at(k, 0) = d[k];
        out.push_back({"nijenhuis", {i, j}, col});
      }
    }
  const Matrix s2 = p.s * p.s;
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Vec x = basis_vec(a.dim, i);
    const Vec nx = p.n.apply(x);
    const Matrix lx = ell_of(p.bimodule, x), lnx = ell_of(p.bimodule, nx);
    const Matrix rx = rr_of(p.bimodule, x), rnx = rr_of(p.bimodule, nx);
    Matrix dl = lnx * p.s - (p.s * lnx + lx * s2 - p.s * lx * p.s);
    if (!dl.is_zero()) out.push_back({"ell", {i}, dl});
    Matrix dr = rnx * p.s - (p.s * rnx + rx * s2 - p.s * rx * p.s);
    if (!dr.is_zero()) out.push_back({"rr", {i}, dr});
  }
  return out;
}

CheckReport is_perfect_pair(const NijenhuisPair& p) {
  check_pair_shape(p);
  if (!nijenhuis_pair_defects(p).empty())
    return CheckReport::fail({}, {}, "not a Nijenhuis pair");
  const Matrix s2 = p.s * p.s;
  const Scalar two(2);
  for (std::size_t i = 0; i < p.bimodule.base.dim; ++i) {
    const Vec x = basis_vec(p.bimodule.base.dim, i);
    const Matrix lx = ell_of(p.bimodule, x), rx = rr_of(p.bimodule, x);
    Matrix dl = s2 * lx + lx * s2 - two * (p.s * lx * p.s);
    Matrix dr = s2 * rx + rx * s2 - two * (p.s * rx * p.s);
    if (!dl.is_zero() || !dr.is_zero())
      return CheckReport::fail({i}, {}, "perfectness identity fails");
  }
  return CheckReport::pass();
}

PairSumResult pair_sum_nijenhuis(const NijenhuisPair& p) {
  if (!nijenhuis_pair_defects(p).empty())
    throw NotNijenhuisPair("pair sum requires a Nijenhuis pair");
  PairSumResult res;
  res.semi = semidirect(p.bimodule);
  res.sum = blockdiag(p.n, p.s);
  res.check = is_nijenhuis(res.semi, res.sum);
  return res;
}

DeformationData deformation_from_pair(const NijenhuisPair& p) {
  if (!nijenhuis_pair_defects(p).empty())
    throw NotNijenhuisPair("deformation data requires a Nijenhuis pair");
  const Algebra& a = p.bimodule.base;
  DeformationData d;
  d.omega = Tensor3(a.dim);
  Algebra deformed = deformed_product_unchecked(a, p.n);
  d.omega = deformed.c;
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Vec x = basis_vec(a.dim, i);
    const Vec nx = p.n.apply(x);
    d.varpi_ell.push_back(ell_of(p.bimodule, nx) +
                          ell_of(p.bimodule, x) * p.s -
                          p.s * ell_of(p.bimodule, x));
    d.varpi_rr.push_back(rr_of(p.bimodule, nx) + rr_of(p.bimodule, x) * p.s -
                         p.s * rr_of(p.bimodule, x));
  }
  return d;
}

CheckReport deformation_check(const Bimodule& b, const DeformationData& d,
                              const std::vector<Scalar>& t_samples) {
  std::vector<Scalar> distinct;
  for (const Scalar& t : t_samples) {
    bool seen = false;
    for (const Scalar& s : distinct) seen = seen || s == t;
    if (!seen) distinct.push_back(t);
  }
  if (distinct.size() < 5)
    throw TooFewSamples("need at least 5 pairwise distinct samples");
  if (d.omega.dim() != b.base.dim || d.varpi_ell.size() != b.base.dim ||
      d.varpi_rr.size() != b.base.dim)
    throw DimensionMismatch("deformation data does not match bimodule");
  for (const Scalar& t : distinct) {
    Bimodule bt;
    bt.base = Algebra(b.base.dim);
    for (std::size_t i = 0; i < b.base.dim; ++i)
      for (std::size_t j = 0; j < b.base.dim; ++j)
        for (std::size_t k = 0; k < b.base.dim; ++k)
          bt.base.c.at(i, j, k) = b.base.c.at(i, j, k) + t * d.omega.at(i, j, k);
    bt.vdim = b.vdim;
    for (std::size_t i = 0; i < b.base.dim; ++i) {
      bt.ell.push_back(b.ell[i] + t * d.varpi_ell[i]);
      bt.rr.push_back(b.rr[i] + t * d.varpi_rr[i]);
    }
    CheckReport alg = is_pre_malcev(bt.base);
    if (!alg.passed()) {
      alg.notes.push_back("deformed product fails at t = " + format_scalar(t));
      return alg;
    }
    auto defects = bimodule_defects(bt);
    if (!defects.empty()) {
      const BimoduleDefect& first = defects.front();
      return CheckReport::fail({first.i, first.j, first.k}, {},
                               "deformed actions fail axiom " + first.axiom +
                                   " at t = " + format_scalar(t));
    }
  }
  return CheckReport::pass();
}

CheckReport triviality_check(const NijenhuisPair& p, const DeformationData& d) {
  check_pair_shape(p);
  const Algebra& a = p.bimodule.base;
  if (d.omega.dim() != a.dim || d.varpi_ell.size() != a.dim ||
      d.varpi_rr.size() != a.dim)
    throw DimensionMismatch("deformation data does not match bimodule");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const Vec x = basis_vec(a.dim, i), y = basis_vec(a.dim, j);
      Vec omega(a.dim);
      for (std::size_t k = 0; k < a.dim; ++k) omega[k] = d.omega.at(i, j, k);
      Vec expect = vec_add(multiply(a, p.n.apply(x), y),
                           multiply(a, x, p.n.apply(y)));
      expect = vec_sub(expect, p.n.apply(multiply(a, x, y)));
      if (!vec_is_zero(vec_sub(omega, expect)))
        return CheckReport::fail({i, j}, {}, "identity omega fails");
      Vec lhs2 = p.n.apply(omega);
      Vec rhs2 = multiply(a, p.n.apply(x), p.n.apply(y));
      if (!vec_is_zero(vec_sub(lhs2, rhs2)))
        return CheckReport::fail({i, j}, {}, "identity n-omega fails");
    }
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Vec x = basis_vec(a.dim, i);
    const Vec nx = p.n.apply(x);
    const Matrix lx = ell_of(p.bimodule, x), lnx = ell_of(p.bimodule, nx);
    const Matrix rx = rr_of(p.bimodule, x), rnx = rr_of(p.bimodule, nx);
    if (!(d.varpi_ell[i] == lnx + lx * p.s - p.s * lx))
      return CheckReport::fail({i}, {}, "identity varpi-ell fails");
    if (!(d.varpi_rr[i] == rnx + rx * p.s - p.s * rx))
      return CheckReport::fail({i}, {}, "identity varpi-rr fails");
    if (!(p.s * d.varpi_ell[i] == lnx * p.s))
      return CheckReport::fail({i}, {}, "identity s-varpi-ell fails");
    if (!(p.s * d.varpi_rr[i] == rnx * p.s))
      return CheckReport::fail({i}, {}, "identity s-varpi-rr fails");
  }
  return CheckReport::pass();
}

MalcevRBTools malcev_rb_tools(const Algebra& m, const Matrix& r,
                              const Matrix& n) {
  if (!is_malcev(m).passed())
    throw NotMalcev("base algebra must be a verified Malcev algebra");
  if (r.rows() != m.dim || r.cols() != m.dim || n.rows() != m.dim ||
      n.cols() != m.dim)
    throw DimensionMismatch("operators must be square of the algebra dimension");
  MalcevRBTools out;
  out.rb_check = is_rota_baxter(m, r);
  out.nij_check = is_nijenhuis(m, n);
  // x .^R y = [R(x), y]
  out.induced = Algebra(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) {
      Vec prod = multiply(m, r.apply(basis_vec(m.dim, i)), basis_vec(m.dim, j));
      for (std::size_t k = 0; k < m.dim; ++k) out.induced.c.at(i, j, k) = prod[k];
    }
  out.deformed_bracket = deformed_product_unchecked(m, n);
  const bool commute = r * n == n * r;
  if (!commute || !out.rb_check.passed() || !out.nij_check.passed()) {
    out.prop_check = CheckReport::pass_with_note(
        "preconditions not met; nothing to verify");
    return out;
  }
  CheckReport c1 = is_rota_baxter(out.deformed_bracket, r);
  CheckReport c2 = is_nijenhuis(out.induced, n);
  if (!c1.passed()) {
    out.prop_check = c1;
    out.prop_check.notes.push_back("operator fails on the deformed bracket");
  } else if (!c2.passed()) {
    out.prop_check = c2;
    out.prop_check.notes.push_back("operator fails on the induced product");
  } else {
    out.prop_check = CheckReport::pass();
  }
  return out;
}

}  // namespace pmalcev
