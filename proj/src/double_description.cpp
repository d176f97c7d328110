#include "double_description.hpp"

#include <algorithm>
#include <cstdint>

namespace polymut::detail {
namespace {

using ZeroSet = std::vector<std::uint64_t>;

bool zs_subset(const ZeroSet& a, const ZeroSet& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

ZeroSet zs_intersect(const ZeroSet& a, const ZeroSet& b) {
  ZeroSet out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

struct Ray {
  ZVec v;
  ZeroSet zero;  // processed constraints tight at v
};

ZeroSet tight_set(const std::vector<ZVec>& rows, size_t upto, const ZVec& v, size_t words) {
  ZeroSet z(words, 0);
  for (size_t i = 0; i < upto; ++i)
    if (dot_z(rows[i], v) == 0) z[i >> 6] |= std::uint64_t(1) << (i & 63);
  return z;
}

}  // namespace

// Incremental double description with explicit lineality handling. The state
// (lineality basis L, extreme rays R) always describes the cone cut out by
// the constraints processed so far; L equals the null space of those rows.
ConeDescription dual_cone(const std::vector<ZVec>& rows, int dim) {
  const size_t words = (rows.size() + 63) / 64;

  std::vector<ZVec> lineality(dim);
  for (int i = 0; i < dim; ++i) {
    lineality[i].assign(dim, 0);
    lineality[i][i] = 1;
  }
  std::vector<Ray> rays;

  for (size_t k = 0; k < rows.size(); ++k) {
    const ZVec& a = rows[k];

    // Lineality elimination: if the constraint is nonzero on the current
    // lineality space, one basis vector becomes a ray and the rest project.
    size_t pivot = lineality.size();
    Int pivot_val;
    for (size_t i = 0; i < lineality.size(); ++i) {
      Int s = dot_z(a, lineality[i]);
      if (s != 0) {
        Int as = abs(s);
        if (pivot == lineality.size() || as < abs(pivot_val)) {
          pivot = i;
          pivot_val = s;
        }
      }
    }
    if (pivot != lineality.size()) {
      ZVec v = lineality[pivot];
      lineality.erase(lineality.begin() + pivot);
      if (pivot_val > 0) {
        for (auto& x : v) x = -x;
        pivot_val = -pivot_val;
      }
      // Now a . v < 0. Project the other basis vectors and rays onto a = 0.
      for (auto& u : lineality) {
        Int s = dot_z(a, u);
        if (s != 0) {
          for (size_t c = 0; c < u.size(); ++c) u[c] = pivot_val * u[c] - s * v[c];
          divide_by_content(u);
        }
      }
      for (auto& r : rays) {
        Int s = dot_z(a, r.v);
        if (s != 0) {
          for (size_t c = 0; c < r.v.size(); ++c) r.v[c] = -pivot_val * r.v[c] + s * v[c];
          divide_by_content(r.v);
        }
        r.zero = tight_set(rows, k + 1, r.v, words);
      }
      Ray nr{std::move(v), {}};
      divide_by_content(nr.v);
      nr.zero = tight_set(rows, k + 1, nr.v, words);
      rays.push_back(std::move(nr));
      continue;
    }

    // Standard double-description step on the pointed part.
    std::vector<Int> side(rays.size());
    bool any_pos = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      side[i] = dot_z(a, rays[i].v);
      if (side[i] > 0) any_pos = true;
    }
    if (!any_pos) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (side[i] == 0) rays[i].zero[k >> 6] |= std::uint64_t(1) << (k & 63);
      continue;
    }

    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (side[i] > 0) continue;
      Ray r = rays[i];
      if (side[i] == 0) r.zero[k >> 6] |= std::uint64_t(1) << (k & 63);
      next.push_back(std::move(r));
    }
    for (size_t i = 0; i < rays.size(); ++i) {
      if (side[i] >= 0) continue;
      for (size_t j = 0; j < rays.size(); ++j) {
        if (side[j] <= 0) continue;
        // Combinatorial adjacency: no third extreme ray is tight on all
        // constraints common to rays i and j.
        ZeroSet common = zs_intersect(rays[i].zero, rays[j].zero);
        bool adjacent = true;
        for (size_t w = 0; w < rays.size(); ++w) {
          if (w == i || w == j) continue;
          if (zs_subset(common, rays[w].zero)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        ZVec combo(a.size());
        for (size_t c = 0; c < a.size(); ++c)
          combo[c] = side[j] * rays[i].v[c] - side[i] * rays[j].v[c];
        divide_by_content(combo);
        bool dup = false;
        for (const Ray& r : next)
          if (r.v == combo) {
            dup = true;
            break;
          }
        if (dup) continue;
        Ray nr{std::move(combo), {}};
        nr.zero = tight_set(rows, k + 1, nr.v, words);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  ConeDescription out;
  out.lineality = std::move(lineality);
  out.rays.reserve(rays.size());
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace polymut::detail
