#ifndef DSSSP_SPARSE_VECTOR_HPP_
#define DSSSP_SPARSE_VECTOR_HPP_

#include <optional>
#include <span>
#include <vector>

#include "dsssp/types.hpp"

namespace dsssp {

// What an absent entry means. A vector never stores its role's implicit
// value: distance vectors never hold +inf, boolean vectors never hold 0.0.
// kValue vectors have no implicit value and keep everything they are given.
enum class VectorRole { kDistance, kBoolean, kValue };

struct Entry {
  Index index;
  Weight value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sorted, duplicate-free (index, value) list of fixed logical length.
// Immutable once built.
class SparseVector {
 public:
  explicit SparseVector(Index length = 0, VectorRole role = VectorRole::kDistance)
      : length_(length), role_(role) {}

  // Collapses duplicate indices with min and drops implicit-valued inputs.
  // Throws std::out_of_range for an index >= length.
  static SparseVector build(Index length, std::span<const Entry> pairs,
                            VectorRole role = VectorRole::kDistance);

  // Adopts already sorted, unique storage. Implicit-valued entries are
  // dropped. Throws std::invalid_argument if the order or range is broken.
  static SparseVector from_sorted(Index length, std::vector<Index> indices,
                                  std::vector<Weight> values,
                                  VectorRole role = VectorRole::kDistance);

  Index length() const { return length_; }
  std::size_t nnz() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  VectorRole role() const { return role_; }

  std::span<const Index> indices() const { return indices_; }
  std::span<const Weight> values() const { return values_; }

  bool contains(Index i) const;
  std::optional<Weight> get(Index i) const;
  std::vector<Entry> entries() const;

  // True when the value is the role's implicit (never stored) value.
  static bool is_implicit(VectorRole role, Weight value);

  // Scan-all check of the container invariants.
  bool check_invariants() const;

  // Structural and bitwise value equality. Role is not compared.
  bool same_entries(const SparseVector& other) const;

 private:
  Index length_;
  VectorRole role_;
  std::vector<Index> indices_;
  std::vector<Weight> values_;
};

// Structural set of vertex ids. Consumers can only ask about membership.
class Mask {
 public:
  explicit Mask(Index length = 0) : length_(length) {}

  // Sorts and deduplicates. Throws std::out_of_range for an index >= length.
  static Mask build(Index length, std::vector<Index> indices);
  static Mask from_sorted(Index length, std::vector<Index> indices);
  static Mask structure_of(const SparseVector& v);

  Index length() const { return length_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(Index i) const;
  std::span<const Index> indices() const { return indices_; }

  // Boolean vector with 1.0 at every member.
  SparseVector as_vector() const;

  bool check_invariants() const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  Index length_;
  std::vector<Index> indices_;
};

Mask mask_union(const Mask& a, const Mask& b);
Mask mask_intersection(const Mask& a, const Mask& b);

}  // namespace dsssp

#endif  // DSSSP_SPARSE_VECTOR_HPP_
