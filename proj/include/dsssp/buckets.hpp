#ifndef DSSSP_BUCKETS_HPP_
#define DSSSP_BUCKETS_HPP_

#include <cstdint>

#include "dsssp/sparse_matrix.hpp"
#include "dsssp/types.hpp"

namespace dsssp {

// Half-open distance interval [i*delta, (i+1)*delta) of bucket i. Every
// backend derives bucket bounds through this one function so that boundary
// decisions are identical bit for bit.
struct BucketRange {
  Weight lo;
  Weight hi;

  bool contains(Weight x) const { return lo <= x && x < hi; }
};

inline BucketRange bucket_range(std::uint64_t i, Weight delta) {
  const auto k = static_cast<Weight>(i);
  return {k * delta, (k + 1.0) * delta};
}

// Light edges (0 < w <= delta) and heavy edges (w > delta) of one graph.
// Both matrices have their transposed views materialized.
struct EdgeSplit {
  SparseMatrix light;
  SparseMatrix heavy;
  Weight delta = 1.0;
};

}  // namespace dsssp

#endif  // DSSSP_BUCKETS_HPP_
