#include "dsssp/sparse_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <optional>
#include <string>

namespace dsssp {

struct SparseMatrix::Storage {
  Index n = 0;
  std::vector<std::size_t> offsets{0};
  std::vector<Index> cols;
  std::vector<Weight> weights;
};

struct SparseMatrix::TransposeCache {
  std::once_flag once;
  std::optional<SparseMatrix> value;
};

SparseMatrix::SparseMatrix() : SparseMatrix(Index{0}) {}

SparseMatrix::SparseMatrix(Index n) {
  auto s = std::make_shared<Storage>();
  s->n = n;
  s->offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  storage_ = std::move(s);
  cache_ = std::make_shared<TransposeCache>();
}

SparseMatrix::SparseMatrix(std::shared_ptr<const Storage> storage)
    : storage_(std::move(storage)), cache_(std::make_shared<TransposeCache>()) {}

SparseMatrix SparseMatrix::build(Index n, std::span<const Triple> triples,
                                 BuildStats* stats) {
  BuildStats local;
  std::vector<Triple> kept;
  kept.reserve(triples.size());
  for (const Triple& t : triples) {
    if (t.row >= n || t.col >= n) {
      throw std::out_of_range("edge (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) +
                              ") out of range for order " + std::to_string(n));
    }
    if (!(t.weight > 0.0) || !std::isfinite(t.weight)) {
      throw InvalidWeight("edge (" + std::to_string(t.row) + ", " +
                          std::to_string(t.col) +
                          ") has non-positive or non-finite weight");
    }
    if (t.row == t.col) {
      ++local.self_loops_dropped;
      continue;
    }
    kept.push_back(t);
  }
  std::sort(kept.begin(), kept.end(), [](const Triple& a, const Triple& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  auto s = std::make_shared<Storage>();
  s->n = n;
  s->offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  s->cols.reserve(kept.size());
  s->weights.reserve(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (k > 0 && kept[k - 1].row == kept[k].row &&
        kept[k - 1].col == kept[k].col) {
      s->weights.back() = std::min(s->weights.back(), kept[k].weight);
      ++local.duplicates_combined;
      continue;
    }
    s->cols.push_back(kept[k].col);
    s->weights.push_back(kept[k].weight);
    ++s->offsets[kept[k].row + 1];
  }
  for (std::size_t i = 0; i < n; ++i) s->offsets[i + 1] += s->offsets[i];
  if (stats != nullptr) *stats = local;
  return SparseMatrix(std::shared_ptr<const Storage>(std::move(s)));
}

SparseMatrix SparseMatrix::from_csr(Index n, std::vector<std::size_t> row_offsets,
                                    std::vector<Index> cols,
                                    std::vector<Weight> weights) {
  auto s = std::make_shared<Storage>();
  s->n = n;
  s->offsets = std::move(row_offsets);
  s->cols = std::move(cols);
  s->weights = std::move(weights);
  SparseMatrix m(std::shared_ptr<const Storage>(std::move(s)));
  if (!m.check_invariants()) {
    throw std::invalid_argument("compressed-row arrays violate matrix invariants");
  }
  return m;
}

Index SparseMatrix::size() const { return storage_->n; }
std::size_t SparseMatrix::nnz() const { return storage_->cols.size(); }

RowView SparseMatrix::row(Index i) const {
  const Storage& s = *storage_;
  std::size_t b = s.offsets[i];
  std::size_t e = s.offsets[i + 1];
  return {std::span<const Index>(s.cols).subspan(b, e - b),
          std::span<const Weight>(s.weights).subspan(b, e - b)};
}

std::span<const std::size_t> SparseMatrix::row_offsets() const {
  return storage_->offsets;
}
std::span<const Index> SparseMatrix::cols() const { return storage_->cols; }
std::span<const Weight> SparseMatrix::weights() const { return storage_->weights; }

const SparseMatrix& SparseMatrix::transpose() const {
  std::call_once(cache_->once, [this] { cache_->value = transpose_copy(*this); });
  return *cache_->value;
}

bool SparseMatrix::has_cached_transpose() const {
  return cache_->value.has_value();
}

std::vector<Triple> SparseMatrix::triples() const {
  std::vector<Triple> out;
  out.reserve(nnz());
  for (Index i = 0; i < size(); ++i) {
    RowView r = row(i);
    for (std::size_t k = 0; k < r.size(); ++k) out.push_back({i, r.cols[k], r.weights[k]});
  }
  return out;
}

bool SparseMatrix::check_invariants() const {
  const Storage& s = *storage_;
  if (s.offsets.size() != static_cast<std::size_t>(s.n) + 1) return false;
  if (s.offsets.front() != 0 || s.offsets.back() != s.cols.size()) return false;
  if (s.cols.size() != s.weights.size()) return false;
  for (Index i = 0; i < s.n; ++i) {
    if (s.offsets[i] > s.offsets[i + 1]) return false;
    for (std::size_t k = s.offsets[i]; k < s.offsets[i + 1]; ++k) {
      if (s.cols[k] >= s.n || s.cols[k] == i) return false;
      if (k > s.offsets[i] && s.cols[k - 1] >= s.cols[k]) return false;
      if (!(s.weights[k] > 0.0) || !std::isfinite(s.weights[k])) return false;
    }
  }
  return true;
}

bool SparseMatrix::same_entries(const SparseMatrix& other) const {
  const Storage& a = *storage_;
  const Storage& b = *other.storage_;
  if (a.n != b.n || a.offsets != b.offsets || a.cols != b.cols) return false;
  for (std::size_t k = 0; k < a.weights.size(); ++k) {
    if (std::bit_cast<std::uint64_t>(a.weights[k]) !=
        std::bit_cast<std::uint64_t>(b.weights[k])) {
      return false;
    }
  }
  return true;
}

SparseMatrix transpose_copy(const SparseMatrix& a) {
  const Index n = a.size();
  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (Index c : a.cols()) ++offsets[c + 1];
  for (std::size_t j = 0; j < n; ++j) offsets[j + 1] += offsets[j];

  std::vector<Index> cols(a.nnz());
  std::vector<Weight> weights(a.nnz());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // Rows are visited in ascending order, so each output row comes out sorted.
  for (Index i = 0; i < n; ++i) {
    RowView r = a.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::size_t slot = cursor[r.cols[k]]++;
      cols[slot] = i;
      weights[slot] = r.weights[k];
    }
  }
  return SparseMatrix::from_csr(n, std::move(offsets), std::move(cols),
                                std::move(weights));
}

}  // namespace dsssp
