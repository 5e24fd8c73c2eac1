// Brute-force reference implementations used by the tests. Everything here
// expands the defining sums directly with nested index loops, on purpose
// written independently of the library kernels, so the two can be compared.
#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "pmalcev/algebra.hpp"
#include "pmalcev/bimodule.hpp"
#include "pmalcev/errors.hpp"
#include "pmalcev/linalg.hpp"

namespace oracle {

using pmalcev::Matrix;
using pmalcev::Scalar;
using pmalcev::Tensor3;
using Q = Scalar;
using V = std::vector<Q>;

// x . y from structure constants, summed index by index.
inline V prod(const Tensor3& c, std::size_t n, const V& x, const V& y) {
  V out(n, Q(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * c.at(i, j, k);
    }
  return out;
}

inline V add(const V& a, const V& b) {
  V out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline V sub(const V& a, const V& b) {
  V out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool zero(const V& a) {
  for (const auto& e : a)
    if (e != 0) return false;
  return true;
}

inline V unit(std::size_t n, std::size_t i) {
  V out(n, Q(0));
  out[i] = 1;
  return out;
}

// M v by raw loops.
inline V mv(const Matrix& m, const V& v) {
  V out(m.rows(), Q(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

// Linear action sum_i x_i mats[i] applied to v.
inline V act(const std::vector<Matrix>& mats, const V& x, const V& v) {
  V out(v.size(), Q(0));
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t r = 0; r < v.size(); ++r)
      for (std::size_t s = 0; s < v.size(); ++s)
        out[r] += x[i] * mats[i].at(r, s) * v[s];
  }
  return out;
}

// The ten-term defining expression, spelled out term by term.
inline V pm10(const Tensor3& c, std::size_t n, const V& x, const V& y,
              const V& z, const V& t) {
  auto p = [&](const V& a, const V& b) { return prod(c, n, a, b); };
  V out = p(p(y, z), p(x, t));
  out = sub(out, p(p(z, y), p(x, t)));
  out = add(out, p(p(p(x, y), z), t));
  out = sub(out, p(p(p(y, x), z), t));
  out = sub(out, p(p(z, p(x, y)), t));
  out = add(out, p(p(z, p(y, x)), t));
  out = add(out, p(y, p(p(x, z), t)));
  out = sub(out, p(y, p(p(z, x), t)));
  out = sub(out, p(x, p(y, p(z, t))));
  out = add(out, p(z, p(x, p(y, t))));
  return out;
}

// [[x,y],[x,z]] - [[[x,y],z],x] - [[[y,z],x],x] - [[[z,x],x],y]
inline V malcev(const Tensor3& c, std::size_t n, const V& x, const V& y,
                const V& z) {
  auto b = [&](const V& a, const V& d) { return prod(c, n, a, d); };
  V out = b(b(x, y), b(x, z));
  out = sub(out, b(b(b(x, y), z), x));
  out = sub(out, b(b(b(y, z), x), x));
  out = sub(out, b(b(b(z, x), x), y));
  return out;
}

// T(u).T(v) - T(ell_{T(u)}(v) + rr_{T(v)}(u))
inline V o_defect(const pmalcev::Bimodule& b, const Matrix& t, const V& u,
                  const V& v) {
  const V tu = mv(t, u), tv = mv(t, v);
  const V inner = add(act(b.ell, tu, v), act(b.rr, tv, u));
  return sub(prod(b.base.c, b.base.dim, tu, tv), mv(t, inner));
}

// ell_{T(u)}(v) + rr_{T(v)}(u)
inline V diamond(const pmalcev::Bimodule& b, const Matrix& t, const V& u,
                 const V& v) {
  return add(act(b.ell, mv(t, u), v), act(b.rr, mv(t, v), u));
}

// The three-term twisted product S(u)<>v + u<>S(v) - S(u<>v).
inline V diamond_s(const pmalcev::Bimodule& b, const Matrix& t, const Matrix& s,
                   const V& u, const V& v) {
  V out = add(diamond(b, t, mv(s, u), v), diamond(b, t, u, mv(s, v)));
  return sub(out, mv(s, diamond(b, t, u, v)));
}

// T1(u).T2(v) + T2(u).T1(v)
//   - T1(ell_{T2(u)}(v) + rr_{T2(v)}(u)) - T2(ell_{T1(u)}(v) + rr_{T1(v)}(u))
inline V compat_defect(const pmalcev::Bimodule& b, const Matrix& t1,
                       const Matrix& t2, const V& u, const V& v) {
  const std::size_t n = b.base.dim;
  V out = prod(b.base.c, n, mv(t1, u), mv(t2, v));
  out = add(out, prod(b.base.c, n, mv(t2, u), mv(t1, v)));
  out = sub(out, mv(t1, diamond(b, t2, u, v)));
  out = sub(out, mv(t2, diamond(b, t1, u, v)));
  return out;
}

// N(x).N(y) - N(N(x).y + x.N(y) - N(x.y))
inline V nij_defect(const Tensor3& c, std::size_t n, const Matrix& nn,
                    const V& x, const V& y) {
  V inner = add(prod(c, n, mv(nn, x), y), prod(c, n, x, mv(nn, y)));
  inner = sub(inner, mv(nn, prod(c, n, x, y)));
  return sub(prod(c, n, mv(nn, x), mv(nn, y)), mv(nn, inner));
}

// N(x).y + x.N(y) - N(x.y)
inline V omega(const Tensor3& c, std::size_t n, const Matrix& nn, const V& x,
               const V& y) {
  V out = add(prod(c, n, mv(nn, x), y), prod(c, n, x, mv(nn, y)));
  return sub(out, mv(nn, prod(c, n, x, y)));
}

// -r12.r13 + r12.r23 + [r13, r23] as a flat n^3 array, assembled from full
// triple tensor products of coordinate vectors.
inline std::vector<Q> cybe(const Tensor3& c, std::size_t n, const Matrix& r) {
  std::vector<Q> out(n * n * n, Q(0));
  auto put = [&](const V& a, const V& b, const V& d, const Q& coef) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        for (std::size_t k = 0; k < n; ++k)
          out[(i * n + j) * n + k] += coef * a[i] * b[j] * d[k];
      }
    }
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (r.at(a, b) == 0) continue;
      for (std::size_t cc = 0; cc < n; ++cc)
        for (std::size_t d = 0; d < n; ++d) {
          if (r.at(cc, d) == 0) continue;
          const Q coef = r.at(a, b) * r.at(cc, d);
          const V ea = unit(n, a), eb = unit(n, b), ec = unit(n, cc),
                  ed = unit(n, d);
          put(prod(c, n, ea, ec), eb, ed, -coef);
          put(ea, prod(c, n, eb, ec), ed, coef);
          put(ea, ec, sub(prod(c, n, eb, ed), prod(c, n, ed, eb)), coef);
        }
    }
  return out;
}

// The four action identities applied to a module vector w at x,y,z. Each is
// written as a chain of raw applications so the library's matrix form can be
// checked against it.
inline V bimodule_axiom(const pmalcev::Bimodule& bm, int axiom, const V& x,
                        const V& y, const V& z, const V& w) {
  const Tensor3& c = bm.base.c;
  const std::size_t n = bm.base.dim;
  auto L = [&](const V& a, const V& v) { return act(bm.ell, a, v); };
  auto R = [&](const V& a, const V& v) { return act(bm.rr, a, v); };
  auto p = [&](const V& a, const V& b) { return prod(c, n, a, b); };
  V out(w.size(), Q(0));
  switch (axiom) {
    case 1:
      out = R(x, R(y, R(z, w)));
      out = sub(out, R(x, R(y, L(z, w))));
      out = sub(out, R(x, L(y, R(z, w))));
      out = add(out, R(x, L(y, L(z, w))));
      out = sub(out, R(p(z, p(y, x)), w));
      out = add(out, L(y, R(p(z, x), w)));
      out = add(out, L(p(z, y), R(x, w)));
      out = sub(out, L(p(y, z), R(x, w)));
      out = sub(out, L(z, R(x, L(y, w))));
      out = add(out, L(z, R(x, R(y, w))));
      break;
    case 2:
      out = R(x, R(y, L(z, w)));
      out = sub(out, R(x, R(y, R(z, w))));
      out = sub(out, R(x, L(y, L(z, w))));
      out = add(out, R(x, L(y, R(z, w))));
      out = sub(out, L(z, R(p(y, x), w)));
      out = add(out, L(y, L(z, R(x, w))));
      out = add(out, R(p(z, x), R(y, w)));
      out = sub(out, R(p(z, x), L(y, w)));
      out = sub(out, R(p(p(y, z), x), w));
      out = add(out, R(p(p(z, y), x), w));
      break;
    case 3:
      out = R(x, L(p(y, z), w));
      out = sub(out, R(x, L(p(z, y), w)));
      out = sub(out, R(x, R(p(y, z), w)));
      out = add(out, R(x, R(p(z, y), w)));
      out = sub(out, L(y, L(z, R(x, w))));
      out = add(out, R(p(y, p(z, x)), w));
      out = add(out, R(p(y, x), L(z, w)));
      out = sub(out, R(p(y, x), R(z, w)));
      out = sub(out, L(z, R(x, R(y, w))));
      out = add(out, L(z, R(x, L(y, w))));
      break;
    case 4:
      out = L(p(p(x, y), z), w);
      out = sub(out, L(p(p(y, x), z), w));
      out = sub(out, L(p(z, p(x, y)), w));
      out = add(out, L(p(z, p(y, x)), w));
      out = sub(out, L(x, L(y, L(z, w))));
      out = add(out, L(z, L(x, L(y, w))));
      out = add(out, L(p(y, z), L(x, w)));
      out = sub(out, L(p(z, y), L(x, w)));
      out = sub(out, L(y, L(p(z, x), w)));
      out = add(out, L(y, L(p(x, z), w)));
      break;
  }
  return out;
}

// Deterministic small rationals for property tests.
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  Q rational() {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    return Q(num(gen_), den(gen_));
  }

  int integer(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(gen_);
  }

  V vec(std::size_t n) {
    V out(n);
    for (auto& e : out) e = rational();
    return out;
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rational();
    return m;
  }

  Matrix symmetric(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = rational();
    return m;
  }

  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m = matrix(n, n);
      try {
        (void)m.inverse();
        return m;
      } catch (const pmalcev::SingularMatrix&) {
      }
    }
  }

 private:
  std::mt19937 gen_;
};

}  // namespace oracle
