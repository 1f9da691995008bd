#ifndef DSSSP_SPARSE_MATRIX_HPP_
#define DSSSP_SPARSE_MATRIX_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dsssp/types.hpp"

namespace dsssp {

struct Triple {
  Index row;
  Index col;
  Weight weight;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct BuildStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_combined = 0;
};

struct RowView {
  std::span<const Index> cols;
  std::span<const Weight> weights;

  std::size_t size() const { return cols.size(); }
};

// Square weighted adjacency matrix in compressed-row form. Row i lists the
// outgoing edges of vertex i. Every stored weight is finite and > 0 and the
// diagonal is empty.
//
// The storage is shared and immutable, so copies are cheap. The transposed
// (column-major) view is built on first request and cached; the cache is
// shared by all copies and is safe to populate from several threads.
class SparseMatrix {
 public:
  SparseMatrix();
  explicit SparseMatrix(Index n);

  // Duplicate (row, col) pairs keep the minimum weight; self-loops are
  // dropped and counted. Throws InvalidWeight for w <= 0 or non-finite w,
  // std::out_of_range for coordinates >= n.
  static SparseMatrix build(Index n, std::span<const Triple> triples,
                            BuildStats* stats = nullptr);

  // Adopts compressed-row arrays. Columns within a row must be strictly
  // increasing; the invariants are validated and violations throw.
  static SparseMatrix from_csr(Index n, std::vector<std::size_t> row_offsets,
                               std::vector<Index> cols,
                               std::vector<Weight> weights);

  Index size() const;
  std::size_t nnz() const;
  RowView row(Index i) const;

  std::span<const std::size_t> row_offsets() const;
  std::span<const Index> cols() const;
  std::span<const Weight> weights() const;

  // Column-major view: row j of the result lists the edges entering j.
  const SparseMatrix& transpose() const;
  bool has_cached_transpose() const;

  std::vector<Triple> triples() const;
  bool check_invariants() const;

  // Entry-for-entry equality, bitwise on weights.
  bool same_entries(const SparseMatrix& other) const;

 private:
  struct Storage;
  struct TransposeCache;

  SparseMatrix(std::shared_ptr<const Storage> storage);

  std::shared_ptr<const Storage> storage_;
  std::shared_ptr<TransposeCache> cache_;
};

// Naive coordinate transpose, uncached. Builds a fresh matrix.
SparseMatrix transpose_copy(const SparseMatrix& a);

}  // namespace dsssp

#endif  // DSSSP_SPARSE_MATRIX_HPP_
