#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "polymut/polytope.hpp"

namespace polymut {

namespace {

// Depth-first enumeration of integer points of {x | A x <= b} inside a box.
// Variables are filled in ambient order; every constraint tightens the range
// of the variable being assigned, relaxing unassigned variables to their box
// bounds. Equations enter as two opposite inequalities, so the last free
// variable of an equation gets pinned (or the branch dies) automatically.
template <typename T>
struct Counter {
  struct Term {
    int constraint;
    T coeff;
  };
  int n = 0;
  std::vector<T> lo, hi;                     // box bounds
  std::vector<std::vector<Term>> var_terms;  // per variable
  std::vector<T> rhs;
  std::vector<T> partial;  // sum over assigned variables
  std::vector<T> remmin;   // min possible sum over unassigned variables
  std::vector<std::vector<T>> cmin;  // per variable: min contribution, aligned with var_terms

  Int count = 0;

  void run() { descend(0); }

  void descend(int j) {
    if (j == n) {
      ++count;
      return;
    }
    T vlo = lo[j], vhi = hi[j];
    const auto& terms = var_terms[j];
    for (size_t t = 0; t < terms.size(); ++t) {
      int c = terms[t].constraint;
      const T& a = terms[t].coeff;
      T slack = rhs[c] - partial[c] - (remmin[c] - cmin[j][t]);
      if (a > 0) {
        T bound = floor_div_t(slack, a);
        if (bound < vhi) vhi = bound;
      } else {
        T bound = ceil_div_t(slack, a);
        if (bound > vlo) vlo = bound;
      }
      if (vlo > vhi) return;
    }
    if (j == n - 1) {
      // Every constraint is fully determined here, so the whole range counts.
      count += Int(range_size(vlo, vhi));
      return;
    }
    for (size_t t = 0; t < terms.size(); ++t) remmin[terms[t].constraint] -= cmin[j][t];
    for (T v = vlo; v <= vhi; ++v) {
      for (const auto& tm : terms) partial[tm.constraint] += tm.coeff * v;
      descend(j + 1);
      for (const auto& tm : terms) partial[tm.constraint] -= tm.coeff * v;
    }
    for (size_t t = 0; t < terms.size(); ++t) remmin[terms[t].constraint] += cmin[j][t];
  }

  static T floor_div_t(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, Int>) {
      return floor_div(a, b);
    } else {
      T q = a / b, r = a % b;
      if (r != 0 && ((r < 0) != (b < 0))) --q;
      return q;
    }
  }
  static T ceil_div_t(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, Int>) {
      return ceil_div(a, b);
    } else {
      T q = a / b, r = a % b;
      if (r != 0 && ((r < 0) == (b < 0))) ++q;
      return q;
    }
  }
  static T range_size(const T& lo, const T& hi) { return hi - lo + 1; }
};

template <typename T>
Int count_with(const Polytope& p, const Int& n, const std::vector<Int>& lo_z,
               const std::vector<Int>& hi_z) {
  const int dim = p.ambient_dimension();
  Counter<T> k;
  k.n = dim;
  k.lo.resize(dim);
  k.hi.resize(dim);
  for (int i = 0; i < dim; ++i) {
    k.lo[i] = static_cast<T>(lo_z[i].get_si());
    k.hi[i] = static_cast<T>(hi_z[i].get_si());
    if constexpr (std::is_same_v<T, Int>) {
      k.lo[i] = lo_z[i];
      k.hi[i] = hi_z[i];
    }
  }

  std::vector<ZVec> normals;
  ZVec bounds;
  for (const auto& h : p.inequalities()) {
    normals.push_back(h.normal);
    bounds.push_back(h.bound * n);
  }
  for (const auto& e : p.equations()) {
    normals.push_back(e.normal);
    bounds.push_back(e.bound * n);
    ZVec neg = e.normal;
    for (auto& x : neg) x = -x;
    normals.push_back(std::move(neg));
    bounds.push_back(-e.bound * n);
  }

  const int m = static_cast<int>(normals.size());
  k.var_terms.resize(dim);
  k.cmin.resize(dim);
  k.rhs.resize(m);
  k.partial.assign(m, T(0));
  k.remmin.assign(m, T(0));
  for (int c = 0; c < m; ++c) {
    if constexpr (std::is_same_v<T, Int>) {
      k.rhs[c] = bounds[c];
    } else {
      k.rhs[c] = static_cast<T>(bounds[c].get_si());
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int c = 0; c < m; ++c) {
      const Int& a = normals[c][j];
      if (a == 0) continue;
      T coeff;
      if constexpr (std::is_same_v<T, Int>) {
        coeff = a;
      } else {
        coeff = static_cast<T>(a.get_si());
      }
      T contrib_lo = coeff * k.lo[j], contrib_hi = coeff * k.hi[j];
      T cm = std::min(contrib_lo, contrib_hi);
      k.var_terms[j].push_back({c, coeff});
      k.cmin[j].push_back(cm);
      k.remmin[c] += cm;
    }
  }
  k.run();
  return k.count;
}

}  // namespace

Int count_lattice_points(const Polytope& p, long long n) {
  if (n < 0) throw std::invalid_argument("dilation index must be nonnegative");
  const auto& verts = p.vertices();
  if (verts.empty()) return 0;
  if (n == 0) return 1;

  const int dim = p.ambient_dimension();
  const Int nz(static_cast<long>(n));
  std::vector<Int> lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    Rat mn = verts[0][i], mx = verts[0][i];
    for (const auto& v : verts) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = rat_ceil(mn * Rat(nz));
    hi[i] = rat_floor(mx * Rat(nz));
    if (lo[i] > hi[i]) return 0;
  }

  // Use native 64-bit arithmetic when no partial sum can overflow.
  Int magnitude = 1;
  for (int i = 0; i < dim; ++i) {
    Int m = std::max(abs(lo[i]), abs(hi[i]));
    if (m > magnitude) magnitude = m;
  }
  Int worst = 0;
  for (const auto& h : p.inequalities()) {
    Int s = abs(h.bound * nz);
    for (const auto& a : h.normal) s += abs(a) * magnitude;
    if (s > worst) worst = s;
  }
  for (const auto& e : p.equations()) {
    Int s = abs(e.bound * nz);
    for (const auto& a : e.normal) s += abs(a) * magnitude;
    if (s > worst) worst = s;
  }
  if (worst < Int("2305843009213693952"))  // 2^61
    return count_with<std::int64_t>(p, nz, lo, hi);
  return count_with<Int>(p, nz, lo, hi);
}

std::vector<Int> count_lattice_points_upto(const Polytope& p, long long n_max, int threads) {
  if (n_max < 0) throw std::invalid_argument("dilation range must be nonnegative");
  p.vertices();  // compute once before sharing across workers
  std::vector<Int> counts(n_max + 1);
  const int workers = std::min<long long>(counting_threads(threads), n_max + 1);
  if (workers <= 1) {
    for (long long n = 0; n <= n_max; ++n) counts[n] = count_lattice_points(p, n);
    return counts;
  }
  std::atomic<long long> next(0);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        long long n = next.fetch_add(1);
        if (n > n_max) return;
        counts[n] = count_lattice_points(p, n);
      }
    });
  }
  for (auto& t : pool) t.join();
  return counts;
}

}  // namespace polymut
