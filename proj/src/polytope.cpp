#include "polymut/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "double_description.hpp"

namespace polymut {

namespace {

int compare_qvec(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

void HalfSpace::normalize() {
  if (is_zero(normal)) throw std::invalid_argument("half-space normal must be nonzero");
  ZVec all = normal;
  all.push_back(bound);
  Int g = content(all);
  if (g > 1) {
    for (auto& x : normal) x /= g;
    bound /= g;
  }
}

void AffineEquation::normalize() {
  if (is_zero(normal)) throw std::invalid_argument("equation normal must be nonzero");
  ZVec all = normal;
  all.push_back(bound);
  Int g = content(all);
  if (g > 1) {
    for (auto& x : normal) x /= g;
    bound /= g;
  }
  for (const auto& x : normal) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : normal) y = -y;
      bound = -bound;
    }
    break;
  }
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

Polytope::Polytope(std::vector<std::string> labels, std::vector<HalfSpace> inequalities,
                   std::vector<AffineEquation> equations)
    : labels_(std::move(labels)), ineqs_(std::move(inequalities)), eqs_(std::move(equations)) {
  const size_t n = labels_.size();
  for (const auto& h : ineqs_)
    if (h.normal.size() != n) throw std::invalid_argument("inequality dimension mismatch");
  for (const auto& e : eqs_)
    if (e.normal.size() != n) throw std::invalid_argument("equation dimension mismatch");
  // Deduplicate constraints; the double description does not need them and
  // exact comparison is cheap after normalization.
  std::sort(ineqs_.begin(), ineqs_.end(), [](const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.bound < b.bound;
  });
  ineqs_.erase(std::unique(ineqs_.begin(), ineqs_.end()), ineqs_.end());
  std::sort(eqs_.begin(), eqs_.end(), [](const AffineEquation& a, const AffineEquation& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.bound < b.bound;
  });
  eqs_.erase(std::unique(eqs_.begin(), eqs_.end()), eqs_.end());
}

Polytope::Polytope(const Polytope& o)
    : labels_(o.labels_), ineqs_(o.ineqs_), eqs_(o.eqs_) {
  std::lock_guard<std::mutex> lock(o.cache_mutex_);
  have_vertices_ = o.have_vertices_;
  vertices_ = o.vertices_;
  dim_ = o.dim_;
}

Polytope& Polytope::operator=(const Polytope& o) {
  if (this == &o) return *this;
  Polytope tmp(o);
  labels_ = std::move(tmp.labels_);
  ineqs_ = std::move(tmp.ineqs_);
  eqs_ = std::move(tmp.eqs_);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  have_vertices_ = tmp.have_vertices_;
  vertices_ = std::move(tmp.vertices_);
  dim_ = tmp.dim_;
  return *this;
}

const std::vector<QVec>& Polytope::vertices() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (have_vertices_) return vertices_;

  const int n = ambient_dimension();
  // Homogenize: a point x of P corresponds to the ray (x, 1). Equations come
  // first so the lineality shrinks before any combinatorial work happens.
  std::vector<ZVec> rows;
  for (const auto& e : eqs_) {
    ZVec r = e.normal;
    r.push_back(-e.bound);
    rows.push_back(r);
    for (auto& x : r) x = -x;
    rows.push_back(std::move(r));
  }
  {
    ZVec t(n + 1, 0);
    t[n] = -1;  // t >= 0
    rows.push_back(std::move(t));
  }
  for (const auto& h : ineqs_) {
    ZVec r = h.normal;
    r.push_back(-h.bound);
    rows.push_back(std::move(r));
  }

  auto cone = detail::dual_cone(rows, n + 1);

  std::vector<QVec> verts;
  bool recession = !cone.lineality.empty();
  for (const ZVec& ray : cone.rays) {
    if (ray[n] == 0) {
      recession = true;
      continue;
    }
    QVec x(n);
    for (int i = 0; i < n; ++i) {
      x[i] = Rat(ray[i], ray[n]);
      x[i].canonicalize();
    }
    verts.push_back(std::move(x));
  }
  if (verts.empty()) {
    vertices_.clear();
    have_vertices_ = true;
    return vertices_;
  }
  if (recession)
    throw UnboundedError("polytope is unbounded: recession direction detected");

  std::sort(verts.begin(), verts.end(),
            [](const QVec& a, const QVec& b) { return compare_qvec(a, b) < 0; });
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  vertices_ = std::move(verts);
  have_vertices_ = true;
  return vertices_;
}

bool Polytope::contains(const QVec& x) const {
  if (static_cast<int>(x.size()) != ambient_dimension())
    throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& h : ineqs_)
    if (dot(h.normal, x) > Rat(h.bound)) return false;
  for (const auto& e : eqs_)
    if (dot(e.normal, x) != Rat(e.bound)) return false;
  return true;
}

int Polytope::dimension() const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (dim_) return *dim_;
  }
  const auto& verts = vertices();
  int d;
  if (verts.empty()) {
    d = -1;
  } else {
    QMat diffs;
    for (size_t i = 1; i < verts.size(); ++i) {
      QVec row(verts[i].size());
      for (size_t c = 0; c < row.size(); ++c) row[c] = verts[i][c] - verts[0][c];
      diffs.push_back(std::move(row));
    }
    d = rank_of_rows(std::move(diffs));
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  dim_ = d;
  return d;
}

Int Polytope::denominator() const {
  const auto& verts = vertices();
  if (verts.empty()) throw EmptyPolytopeError("denominator of empty polytope");
  Int l = 1;
  for (const auto& v : verts)
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

Polytope Polytope::dilate(const Int& k) const {
  if (k <= 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<HalfSpace> hs;
  hs.reserve(ineqs_.size());
  for (const auto& h : ineqs_) hs.emplace_back(h.normal, h.bound * k);
  std::vector<AffineEquation> es;
  es.reserve(eqs_.size());
  for (const auto& e : eqs_) es.emplace_back(e.normal, e.bound * k);
  return Polytope(labels_, std::move(hs), std::move(es));
}

Polytope Polytope::with_equations(const std::vector<AffineEquation>& extra) const {
  std::vector<AffineEquation> es = eqs_;
  for (const auto& e : extra) {
    if (e.normal.size() != labels_.size())
      throw std::invalid_argument("equation dimension mismatch");
    es.push_back(e);
  }
  return Polytope(labels_, ineqs_, std::move(es));
}

Polytope Polytope::hull(const std::vector<QVec>& points, std::vector<std::string> labels) {
  if (points.empty()) throw std::invalid_argument("hull of empty point set");
  const int n = static_cast<int>(points[0].size());
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("hull: label count mismatch");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("hull: ragged point set");

  // A valid inequality a.x <= b is a ray of the cone cut out by the rows
  // (p, -1); the lineality of that cone carries the affine-hull equations.
  std::vector<ZVec> rows;
  for (const auto& p : points) {
    QVec h = p;
    h.push_back(Rat(-1));
    rows.push_back(scale_to_integer(h));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  auto cone = detail::dual_cone(rows, n + 1);

  std::vector<AffineEquation> eqs;
  for (const ZVec& l : cone.lineality) {
    ZVec a(l.begin(), l.begin() + n);
    if (is_zero(a)) continue;  // cannot happen for consistent input
    eqs.emplace_back(std::move(a), l[n]);
  }
  std::vector<HalfSpace> ineqs;
  for (const ZVec& r : cone.rays) {
    ZVec a(r.begin(), r.begin() + n);
    if (is_zero(a)) continue;  // the trivial ray 0.x <= const
    ineqs.emplace_back(std::move(a), r[n]);
  }

  Polytope p(std::move(labels), std::move(ineqs), std::move(eqs));

  // The vertex set is the extreme subset of the input points: a point is a
  // vertex exactly when its tight constraints span the ambient space.
  std::vector<QVec> cand = points;
  std::sort(cand.begin(), cand.end(),
            [](const QVec& a, const QVec& b) { return compare_qvec(a, b) < 0; });
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<QVec> verts;
  for (const auto& pt : cand) {
    QMat tight;
    for (const auto& e : p.eqs_) {
      QVec row(e.normal.begin(), e.normal.end());
      tight.push_back(std::move(row));
    }
    for (const auto& h : p.ineqs_) {
      if (dot(h.normal, pt) == Rat(h.bound)) {
        QVec row(h.normal.begin(), h.normal.end());
        tight.push_back(std::move(row));
      }
    }
    if (rank_of_rows(std::move(tight)) == n) verts.push_back(pt);
  }
  {
    std::lock_guard<std::mutex> lock(p.cache_mutex_);
    p.vertices_ = std::move(verts);
    p.have_vertices_ = true;
  }
  return p;
}

bool polytopes_equal(const Polytope& p, const Polytope& q) {
  if (p.ambient_dimension() != q.ambient_dimension())
    throw std::invalid_argument("polytopes_equal: ambient dimension mismatch");
  return p.vertices() == q.vertices();
}

int counting_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("POLYMUT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(std::min(hw, 8u));
}

}  // namespace polymut
