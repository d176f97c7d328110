#pragma once

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polymut/rational.hpp"

namespace polymut {

struct UnboundedError : std::runtime_error {
  explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyPolytopeError : std::domain_error {
  explicit EmptyPolytopeError(const std::string& what) : std::domain_error(what) {}
};

// normal . x <= bound, with gcd(normal entries, bound) = 1.
struct HalfSpace {
  ZVec normal;
  Int bound;

  HalfSpace(ZVec n, Int b) : normal(std::move(n)), bound(std::move(b)) { normalize(); }
  void normalize();
  bool operator==(const HalfSpace&) const = default;
};

// normal . x == bound; content 1 and positive leading nonzero entry.
struct AffineEquation {
  ZVec normal;
  Int bound;

  AffineEquation(ZVec n, Int b) : normal(std::move(n)), bound(std::move(b)) { normalize(); }
  void normalize();
  bool operator==(const AffineEquation&) const = default;
};

// A rational convex polytope held in H-representation, with the exact vertex
// set computed on demand (double description) and cached. Immutable apart
// from the caches, which are compute-once and safe under concurrent readers.
class Polytope {
 public:
  Polytope(std::vector<std::string> labels, std::vector<HalfSpace> inequalities,
           std::vector<AffineEquation> equations);

  // Convex hull of a nonempty point set: derives the irredundant
  // H-representation and keeps the extreme input points as the vertex cache.
  static Polytope hull(const std::vector<QVec>& points, std::vector<std::string> labels = {});

  int ambient_dimension() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<HalfSpace>& inequalities() const { return ineqs_; }
  const std::vector<AffineEquation>& equations() const { return eqs_; }

  // Exact vertex set, deduplicated and sorted lexicographically; empty for an
  // empty polytope. Throws UnboundedError when a recession direction exists.
  const std::vector<QVec>& vertices() const;

  bool is_empty() const { return vertices().empty(); }
  bool contains(const QVec& x) const;
  int dimension() const;   // affine dimension; -1 for empty
  Int denominator() const;  // throws EmptyPolytopeError on empty

  Polytope dilate(const Int& k) const;
  Polytope with_equations(const std::vector<AffineEquation>& extra) const;

  Polytope(const Polytope& o);
  Polytope& operator=(const Polytope& o);

 private:
  Polytope() = default;
  std::vector<std::string> labels_;
  std::vector<HalfSpace> ineqs_;
  std::vector<AffineEquation> eqs_;

  mutable std::mutex cache_mutex_;
  mutable bool have_vertices_ = false;
  mutable std::vector<QVec> vertices_;
  mutable std::optional<int> dim_;
};

// Exact equality of solution sets (vertex sets coincide).
bool polytopes_equal(const Polytope& p, const Polytope& q);

// Number of lattice points in the n-th dilate; n = 0 counts 1 for nonempty P.
Int count_lattice_points(const Polytope& p, long long n);

// Counts for n = 0..n_max, computed in parallel over dilates. threads = 0
// reads POLYMUT_THREADS (default: hardware concurrency, capped at 8).
std::vector<Int> count_lattice_points_upto(const Polytope& p, long long n_max, int threads = 0);

int counting_threads(int requested);

std::vector<std::string> default_labels(int n);

}  // namespace polymut
