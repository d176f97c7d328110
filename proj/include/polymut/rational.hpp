#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace polymut {

using Int = mpz_class;
using Rat = mpq_class;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using ZMat = std::vector<ZVec>;
using QMat = std::vector<QVec>;

inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

// Canonical form, e.g. "3", "-1/2".
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

template <typename V>
Rat dot(const V& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Int dot_z(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const ZVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// gcd of all entries, nonnegative; 0 for the zero vector.
inline Int content(const ZVec& v) {
  Int g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void divide_by_content(ZVec& v) {
  Int g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Clears denominators: returns the integer vector lambda*v with lambda minimal positive.
inline ZVec scale_to_integer(const QVec& v) {
  Int l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  ZVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat t = v[i] * Rat(l);
    out[i] = t.get_num();
  }
  return out;
}

// Rank of a set of rational row vectors (Gaussian elimination).
inline int rank_of_rows(QMat rows) {
  size_t m = rows.size();
  if (m == 0) return 0;
  size_t n = rows[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t piv = row;
    while (piv < m && rows[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[row]);
    for (size_t r = 0; r < m; ++r) {
      if (r == row || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[row][col];
      for (size_t c = col; c < n; ++c) rows[r][c] -= f * rows[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Determinant of a square integer matrix (Bareiss fraction-free elimination).
inline Int determinant(ZMat a) {
  size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Inverse of a square rational matrix; throws if singular.
inline QMat inverse(QMat a) {
  size_t n = a.size();
  QMat inv(n, QVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace polymut
