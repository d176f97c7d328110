#pragma once

#include <vector>

#include "polymut/rational.hpp"

namespace polymut::detail {

// Description of the cone {y in R^dim | row . y <= 0 for every row}:
// a lineality basis plus the extreme rays of the pointed part. Rays are
// integer vectors with content 1.
struct ConeDescription {
  std::vector<ZVec> lineality;
  std::vector<ZVec> rays;
};

ConeDescription dual_cone(const std::vector<ZVec>& rows, int dim);

}  // namespace polymut::detail
