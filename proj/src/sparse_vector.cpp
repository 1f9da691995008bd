#include "dsssp/sparse_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace dsssp {
namespace {

void check_index(Index i, Index length) {
  if (i >= length) {
    throw std::out_of_range("index " + std::to_string(i) +
                            " out of range for length " +
                            std::to_string(length));
  }
}

}  // namespace

bool SparseVector::is_implicit(VectorRole role, Weight value) {
  switch (role) {
    case VectorRole::kDistance:
      return value == kInfinity;
    case VectorRole::kBoolean:
      return value == 0.0;
    case VectorRole::kValue:
      return false;
  }
  return false;
}

SparseVector SparseVector::build(Index length, std::span<const Entry> pairs,
                                 VectorRole role) {
  std::vector<Entry> sorted(pairs.begin(), pairs.end());
  for (const Entry& e : sorted) check_index(e.index, length);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });

  SparseVector out(length, role);
  out.indices_.reserve(sorted.size());
  out.values_.reserve(sorted.size());
  for (std::size_t k = 0; k < sorted.size();) {
    Index i = sorted[k].index;
    Weight best = sorted[k].value;
    for (++k; k < sorted.size() && sorted[k].index == i; ++k) {
      best = std::min(best, sorted[k].value);
    }
    if (is_implicit(role, best)) continue;
    out.indices_.push_back(i);
    out.values_.push_back(best);
  }
  return out;
}

SparseVector SparseVector::from_sorted(Index length, std::vector<Index> indices,
                                       std::vector<Weight> values,
                                       VectorRole role) {
  if (indices.size() != values.size()) {
    throw std::invalid_argument("index and value arrays differ in size");
  }
  for (std::size_t k = 0; k < indices.size(); ++k) {
    check_index(indices[k], length);
    if (k > 0 && indices[k - 1] >= indices[k]) {
      throw std::invalid_argument("indices are not strictly increasing");
    }
  }
  SparseVector out(length, role);
  if (role == VectorRole::kValue ||
      std::none_of(values.begin(), values.end(),
                   [role](Weight w) { return is_implicit(role, w); })) {
    out.indices_ = std::move(indices);
    out.values_ = std::move(values);
    return out;
  }
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (is_implicit(role, values[k])) continue;
    out.indices_.push_back(indices[k]);
    out.values_.push_back(values[k]);
  }
  return out;
}

bool SparseVector::contains(Index i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::optional<Weight> SparseVector::get(Index i) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
  if (it == indices_.end() || *it != i) return std::nullopt;
  return values_[static_cast<std::size_t>(it - indices_.begin())];
}

std::vector<Entry> SparseVector::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (std::size_t k = 0; k < nnz(); ++k) out.push_back({indices_[k], values_[k]});
  return out;
}

bool SparseVector::check_invariants() const {
  if (indices_.size() != values_.size()) return false;
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] >= length_) return false;
    if (k > 0 && indices_[k - 1] >= indices_[k]) return false;
    if (is_implicit(role_, values_[k])) return false;
  }
  return true;
}

bool SparseVector::same_entries(const SparseVector& other) const {
  if (length_ != other.length_ || indices_ != other.indices_) return false;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (std::bit_cast<std::uint64_t>(values_[k]) !=
        std::bit_cast<std::uint64_t>(other.values_[k])) {
      return false;
    }
  }
  return true;
}

Mask Mask::build(Index length, std::vector<Index> indices) {
  for (Index i : indices) check_index(i, length);
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  Mask m(length);
  m.indices_ = std::move(indices);
  return m;
}

Mask Mask::from_sorted(Index length, std::vector<Index> indices) {
  for (std::size_t k = 0; k < indices.size(); ++k) {
    check_index(indices[k], length);
    if (k > 0 && indices[k - 1] >= indices[k]) {
      throw std::invalid_argument("mask indices are not strictly increasing");
    }
  }
  Mask m(length);
  m.indices_ = std::move(indices);
  return m;
}

Mask Mask::structure_of(const SparseVector& v) {
  Mask m(v.length());
  m.indices_.assign(v.indices().begin(), v.indices().end());
  return m;
}

bool Mask::contains(Index i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

SparseVector Mask::as_vector() const {
  return SparseVector::from_sorted(length_, indices_,
                                   std::vector<Weight>(indices_.size(), 1.0),
                                   VectorRole::kBoolean);
}

bool Mask::check_invariants() const {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] >= length_) return false;
    if (k > 0 && indices_[k - 1] >= indices_[k]) return false;
  }
  return true;
}

Mask mask_union(const Mask& a, const Mask& b) {
  if (a.length() != b.length()) throw DimensionMismatch("mask_union: length mismatch");
  std::vector<Index> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.indices().begin(), a.indices().end(), b.indices().begin(),
                 b.indices().end(), std::back_inserter(out));
  return Mask::from_sorted(a.length(), std::move(out));
}

Mask mask_intersection(const Mask& a, const Mask& b) {
  if (a.length() != b.length()) {
    throw DimensionMismatch("mask_intersection: length mismatch");
  }
  std::vector<Index> out;
  std::set_intersection(a.indices().begin(), a.indices().end(),
                        b.indices().begin(), b.indices().end(),
                        std::back_inserter(out));
  return Mask::from_sorted(a.length(), std::move(out));
}

}  // namespace dsssp
