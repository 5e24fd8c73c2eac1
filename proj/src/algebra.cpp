#include "pmalcev/algebra.hpp"

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

}  // namespace

Vec multiply(const Algebra& a, const Vec& x, const Vec& y) {
  if (x.size() != a.dim || y.size() != a.dim)
    throw DimensionMismatch("vector dimension does not match algebra");
  Vec out(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (y[j] == 0) continue;
      const Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Scalar& ck = a.c.at(i, j, k);
        if (ck != 0) out[k] += f * ck;
      }
    }
  }
  return out;
}

Vec pm_defect(const Algebra& a, const Vec& x, const Vec& y, const Vec& z,
              const Vec& t) {
  auto m = [&a](const Vec& p, const Vec& q) { return multiply(a, p, q); };
  Vec acc = m(m(y, z), m(x, t));
  acc = vec_sub(acc, m(m(z, y), m(x, t)));
  acc = vec_add(acc, m(m(m(x, y), z), t));
  acc = vec_sub(acc, m(m(m(y, x), z), t));
  acc = vec_sub(acc, m(m(z, m(x, y)), t));
  acc = vec_add(acc, m(m(z, m(y, x)), t));
  acc = vec_add(acc, m(y, m(m(x, z), t)));
  acc = vec_sub(acc, m(y, m(m(z, x), t)));
  acc = vec_sub(acc, m(x, m(y, m(z, t))));
  acc = vec_add(acc, m(z, m(x, m(y, t))));
  return acc;
}

CheckReport is_pre_malcev(const Algebra& a) {
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Vec d = pm_defect(a, basis_vec(n, i), basis_vec(n, j),
                            basis_vec(n, k), basis_vec(n, l));
          if (!vec_is_zero(d)) {
            return CheckReport::fail({i, j, k, l}, format_vec(d),
                                     "pre-Malcev identity fails");
          }
        }
  return CheckReport::pass();
}

Algebra commutator_algebra(const Algebra& a) {
  Algebra out(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        out.c.at(i, j, k) = a.c.at(i, j, k) - a.c.at(j, i, k);
  return out;
}

Vec malcev_defect(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  auto br = [&a](const Vec& p, const Vec& q) { return multiply(a, p, q); };
  Vec lhs = br(br(x, y), br(x, z));
  Vec rhs = br(br(br(x, y), z), x);
  rhs = vec_add(rhs, br(br(br(y, z), x), x));
  rhs = vec_add(rhs, br(br(br(z, x), x), y));
  return vec_sub(lhs, rhs);
}

CheckReport is_malcev(const Algebra& a) {
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.c.at(i, j, k) != -a.c.at(j, i, k)) {
          return CheckReport::fail(
              {i, j, k},
              {format_scalar(a.c.at(i, j, k)), format_scalar(a.c.at(j, i, k))},
              "product is not anticommutative");
        }
  // The identity is quadratic in x: beyond basis vectors, x also ranges over
  // all e_p + e_q with p < q, which polarizes the quadratic part.
  std::vector<Vec> xs;
  std::vector<std::vector<std::size_t>> tags;
  for (std::size_t p = 0; p < n; ++p) {
    xs.push_back(basis_vec(n, p));
    tags.push_back({p, p});
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      xs.push_back(vec_add(basis_vec(n, p), basis_vec(n, q)));
      tags.push_back({p, q});
    }
  for (std::size_t xi = 0; xi < xs.size(); ++xi)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec d = malcev_defect(a, xs[xi], basis_vec(n, j), basis_vec(n, k));
        if (!vec_is_zero(d)) {
          return CheckReport::fail({tags[xi][0], tags[xi][1], j, k},
                                   format_vec(d), "Malcev identity fails");
        }
      }
  return CheckReport::pass();
}

Matrix left_mult(const Algebra& a, const Vec& x) {
  if (x.size() != a.dim)
    throw DimensionMismatch("vector dimension does not match algebra");
  Matrix out(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        out.at(k, j) += x[i] * a.c.at(i, j, k);
  }
  return out;
}

Matrix right_mult(const Algebra& a, const Vec& x) {
  if (x.size() != a.dim)
    throw DimensionMismatch("vector dimension does not match algebra");
  Matrix out(a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t k = 0; k < a.dim; ++k)
        out.at(k, i) += x[j] * a.c.at(i, j, k);
  }
  return out;
}

}  // namespace pmalcev
