#pragma once

#include <string>
#include <vector>

#include "polymut/polytope.hpp"
#include "polymut/young.hpp"

namespace polymut {

// H-representations use only covering relations and maximal chains; the
// remaining defining inequalities are implied and left out.
Polytope order_polytope(const YoungDiagram& d);
Polytope chain_polytope(const YoungDiagram& d);
Polytope chain_order_polytope(const YoungDiagram& d, const UpSet& c);

// One equation per diagonal: x(Sbar) - x(Tbar) + x(C cap R) = d_l.
std::vector<AffineEquation> restriction_hyperplanes(const YoungDiagram& d, const UpSet& c,
                                                    const DVec& dv);

// k-th dilate of the chain-order polytope cut by the diagonal hyperplanes.
// C = empty gives the restricted order polytope, C = lambda the restricted
// chain polytope. The result may be empty.
Polytope restricted_chain_order(const YoungDiagram& d, const UpSet& c, const DVec& dv,
                                long long k);

enum class PosetPolytopeKind { Order, Chain };

// Characteristic vectors of all up-sets (order) or antichains (chain),
// by exhaustive enumeration; the independent vertex description.
std::vector<QVec> stanley_vertices(const YoungDiagram& d, PosetPolytopeKind kind);

// Gelfand-Tsetlin patterns with fixed top row `shape` and row sums fixed by
// `content`: entry content[t] is the sum of row t counted from the bottom
// minus the sum of row t-1. The top row is not part of the ambient space.
Polytope gt_polytope(const std::vector<long long>& shape, const std::vector<long long>& content);

// Content vector matching restricted order polytopes of the full rectangle
// [m1] x [m2]; the final entry is forced by the sum condition and is derived
// here rather than given.
std::vector<long long> gt_rectangle_content(int m1, int m2, const DVec& dv, long long k);

struct PolytopeSpec {
  std::vector<int> partition;
  std::string upset = "empty";
  DVec dvec;        // empty means unrestricted
  long long k = 1;

  bool restricted() const { return !dvec.empty(); }
};

// Text form: "partition=4,4,3 upset=empty d=1,2,3,2,2,1 k=2".
PolytopeSpec parse_spec_string(const std::string& text);
Polytope build_polytope(const PolytopeSpec& spec);

}  // namespace polymut
