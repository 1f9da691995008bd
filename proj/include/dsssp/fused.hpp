#ifndef DSSSP_FUSED_HPP_
#define DSSSP_FUSED_HPP_

// Loop-fused versions of the two hot spots of the linear-algebraic
// delta-stepping loop. Each kernel returns exactly what the corresponding
// composition of gb-ops kernels returns, bit for bit, for any worker count.

#include <cstdint>

#include "dsssp/buckets.hpp"
#include "dsssp/parallel.hpp"
#include "dsssp/sparse_matrix.hpp"
#include "dsssp/sparse_vector.hpp"

namespace dsssp {

// vxm_min_plus(ewise_mult(t, bucket), a.transpose()) in one pass, without
// building the masked copy of t. Small frontiers push along the rows of `a`;
// large ones pull over its cached transpose.
SparseVector fused_masked_relax(const SparseVector& t, const Mask& bucket,
                                const SparseMatrix& a, const ExecutionConfig& config = {});

struct BucketUpdate {
  SparseVector t;
  Mask bucket;
  Mask settled;
};

// One merge pass over (t, t_req, settled, old_bucket) producing
//   settled' = settled | old_bucket
//   bucket'  = { k in dom(t_req) : t_req[k] in bucket i, t_req[k] < t[k] }
//   t'       = min(t, t_req)
// where an absent t[k] counts as +inf.
BucketUpdate fused_bucket_update(const SparseVector& t, const SparseVector& t_req,
                                 const Mask& settled, const Mask& old_bucket,
                                 std::uint64_t i, Weight delta,
                                 const ExecutionConfig& config = {});

// ewise_add(t, t_req, min), range-partitioned.
SparseVector fused_min_merge(const SparseVector& t, const SparseVector& t_req,
                             const ExecutionConfig& config = {});

// Light/heavy split in a single pass over the rows, rows divided into
// ranges; the two transposes then run as independent tasks.
EdgeSplit fused_split_edges(const SparseMatrix& a, Weight delta,
                            const ExecutionConfig& config = {});

}  // namespace dsssp

#endif  // DSSSP_FUSED_HPP_
