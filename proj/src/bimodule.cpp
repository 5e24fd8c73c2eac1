#include "pmalcev/bimodule.hpp"

#include "pmalcev/errors.hpp"

namespace pmalcev {

Matrix ell_of(const Bimodule& b, const Vec& x) {
  if (x.size() != b.base.dim)
    throw DimensionMismatch("vector dimension does not match bimodule base");
  Matrix out(b.vdim, b.vdim);
  for (std::size_t i = 0; i < b.base.dim; ++i)
    if (x[i] != 0) out = out + x[i] * b.ell[i];
  return out;
}

Matrix rr_of(const Bimodule& b, const Vec& x) {
  if (x.size() != b.base.dim)
    throw DimensionMismatch("vector dimension does not match bimodule base");
  Matrix out(b.vdim, b.vdim);
  for (std::size_t i = 0; i < b.base.dim; ++i)
    if (x[i] != 0) out = out + x[i] * b.rr[i];
  return out;
}

std::vector<BimoduleDefect> bimodule_defects(const Bimodule& b) {
  std::vector<BimoduleDefect> out;
  const std::size_t n = b.base.dim;
  auto mul = [&b](const Vec& p, const Vec& q) { return multiply(b.base, p, q); };
  auto L = [&b](const Vec& p) { return ell_of(b, p); };
  auto R = [&b](const Vec& p) { return rr_of(b, p); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
        const Matrix lx = L(x), ly = L(y), lz = L(z);
        const Matrix rx = R(x), ry = R(y), rz = R(z);

        Matrix b1 = rx * ry * rz - rx * ry * lz - rx * ly * rz + rx * ly * lz -
                    R(mul(z, mul(y, x))) + ly * R(mul(z, x)) +
                    L(mul(z, y)) * rx - L(mul(y, z)) * rx - lz * rx * ly +
                    lz * rx * ry;
        if (!b1.is_zero()) out.push_back({"B1", i, j, k, b1});

        Matrix b2 = rx * ry * lz - rx * ry * rz - rx * ly * lz + rx * ly * rz -
                    lz * R(mul(y, x)) + ly * lz * rx + R(mul(z, x)) * ry -
                    R(mul(z, x)) * ly - R(mul(mul(y, z), x)) +
                    R(mul(mul(z, y), x));
        if (!b2.is_zero()) out.push_back({"B2", i, j, k, b2});

        Matrix b3 = rx * L(mul(y, z)) - rx * L(mul(z, y)) - rx * R(mul(y, z)) +
                    rx * R(mul(z, y)) - ly * lz * rx + R(mul(y, mul(z, x))) +
                    R(mul(y, x)) * lz - R(mul(y, x)) * rz - lz * rx * ry +
                    lz * rx * ly;
        if (!b3.is_zero()) out.push_back({"B3", i, j, k, b3});

        Matrix b4 = L(mul(mul(x, y), z)) - L(mul(mul(y, x), z)) -
                    L(mul(z, mul(x, y))) + L(mul(z, mul(y, x))) -
                    lx * ly * lz + lz * lx * ly + L(mul(y, z)) * lx -
                    L(mul(z, y)) * lx - ly * L(mul(z, x)) + ly * L(mul(x, z));
        if (!b4.is_zero()) out.push_back({"B4", i, j, k, b4});
      }
  return out;
}

Bimodule regular_bimodule(const Algebra& a) {
  Bimodule b;
  b.base = a;
  b.vdim = a.dim;
  b.ell.reserve(a.dim);
  b.rr.reserve(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    b.ell.push_back(left_mult(a, basis_vec(a.dim, i)));
    b.rr.push_back(right_mult(a, basis_vec(a.dim, i)));
  }
  return b;
}

Bimodule dual_bimodule(const Bimodule& b) {
  Bimodule out;
  out.base = b.base;
  out.vdim = b.vdim;
  out.ell.reserve(b.base.dim);
  out.rr.reserve(b.base.dim);
  for (std::size_t i = 0; i < b.base.dim; ++i) {
    out.ell.push_back(-b.ell[i].transpose() + b.rr[i].transpose());
    out.rr.push_back(b.rr[i].transpose());
  }
  return out;
}

Algebra semidirect(const Bimodule& b) {
  const std::size_t n = b.base.dim;
  const std::size_t m = b.vdim;
  Algebra out(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.c.at(i, j, k) = b.base.c.at(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        out.c.at(i, n + j, n + k) = b.ell[i].at(k, j);
        out.c.at(n + j, i, n + k) = b.rr[i].at(k, j);
      }
  return out;
}

CheckReport malcev_rep_check(const Algebra& m, const std::vector<Matrix>& rho) {
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j)
      for (std::size_t k = 0; k < m.dim; ++k)
        if (m.c.at(i, j, k) != -m.c.at(j, i, k))
          throw NotAntisymmetric("base algebra is not anticommutative");
  if (rho.size() != m.dim)
    throw DimensionMismatch("one action matrix per basis vector expected");
  const std::size_t vd = rho.empty() ? 0 : rho[0].rows();
  const std::size_t n = m.dim;
  Algebra big(n + vd);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) big.c.at(i, j, k) = m.c.at(i, j, k);
  for (std::size_t i = 0; i < n; ++i) {
    if (rho[i].rows() != vd || rho[i].cols() != vd)
      throw DimensionMismatch("action matrices must be square of equal size");
    for (std::size_t j = 0; j < vd; ++j)
      for (std::size_t k = 0; k < vd; ++k) {
        big.c.at(i, n + j, n + k) = rho[i].at(k, j);
        big.c.at(n + j, i, n + k) = -rho[i].at(k, j);
      }
  }
  return is_malcev(big);
}

}  // namespace pmalcev
