#ifndef DSSSP_OPS_HPP_
#define DSSSP_OPS_HPP_

// The GraphBLAS-style kernel subset used by the linear-algebraic
// delta-stepping formulation. Masks only gate which output positions may be
// written; there are no complement/replace descriptors and no accumulators.

#include <functional>
#include <string>
#include <vector>

#include "dsssp/semiring.hpp"
#include "dsssp/sparse_matrix.hpp"
#include "dsssp/sparse_vector.hpp"

namespace dsssp {

struct UnaryPredicate {
  std::function<bool(Weight)> test;
  std::string description;

  bool operator()(Weight x) const { return test(x); }

  static UnaryPredicate always_true();
  static UnaryPredicate greater_than(Weight bound);             // x > bound
  static UnaryPredicate less_equal(Weight bound);               // x <= bound
  static UnaryPredicate open_closed(Weight lo, Weight hi);      // lo < x <= hi
  static UnaryPredicate closed_open(Weight lo, Weight hi);      // lo <= x < hi
};

struct UnaryOp {
  std::function<Weight(Weight)> fn;
  std::string description;

  Weight operator()(Weight x) const { return fn(x); }
};

struct BinaryOp {
  std::function<Weight(Weight, Weight)> fn;
  std::string description;
  bool commutative = false;
  // Comparison-style ops yield 1.0 / 0.0 and their results are boolean
  // vectors, so 0.0 results are not stored.
  bool boolean_result = false;

  Weight operator()(Weight a, Weight b) const { return fn(a, b); }

  static BinaryOp min();
  static BinaryOp plus();
  static BinaryOp times();
  static BinaryOp less_than();
};

// out[i] = op(in[i]) for i in dom(in) (and in the mask, when given). The
// result keeps the input's role.
SparseVector apply_vector(const SparseVector& in, const UnaryOp& op);
SparseVector apply_vector(const SparseVector& in, const UnaryOp& op,
                          const Mask& mask);

// Predicate form: every surviving position carries 1.0 or 0.0, false
// positions included. This is the first half of the two-call filter idiom;
// use filter_vector to get only the true positions.
SparseVector apply_vector(const SparseVector& in, const UnaryPredicate& pred);
SparseVector apply_vector(const SparseVector& in, const UnaryPredicate& pred,
                          const Mask& mask);

// { i in dom(in) : pred(in[i]) }.
Mask filter_vector(const SparseVector& in, const UnaryPredicate& pred);

// A o (pred(A)): keeps exactly the entries whose weight satisfies pred.
SparseMatrix filter_matrix(const SparseMatrix& a, const UnaryPredicate& pred);

// Union semantics. Where only one operand has an entry, that value is
// passed through unchanged whatever op is; a non-commutative op does not
// see a default for the missing side.
SparseVector ewise_add_vector(const SparseVector& u, const SparseVector& v,
                              const BinaryOp& op);
SparseVector ewise_add_vector(const SparseVector& u, const SparseVector& v,
                              const BinaryOp& op, const Mask& mask);

// Intersection semantics: dom(out) = dom(u) & dom(v).
SparseVector ewise_mult_vector(const SparseVector& u, const SparseVector& v,
                               const BinaryOp& op);

// out[j] = add_{i in dom(v), (i,j) in A} multiply(v[i], A(i,j)), taking the
// transposed view A^T whose row j lists the edges entering j. Terms are
// reduced in ascending i. Positions with no terms are absent.
template <Semiring S>
SparseVector vxm(const SparseVector& v, const SparseMatrix& a_transposed,
                 const Mask* mask, VectorRole role);

SparseVector vxm_min_plus(const SparseVector& v, const SparseMatrix& a_transposed);
SparseVector vxm_min_plus(const SparseVector& v, const SparseMatrix& a_transposed,
                          const Mask& mask);

namespace detail {
void check_same_length(Index a, Index b, const char* what);
}  // namespace detail

template <Semiring S>
SparseVector vxm(const SparseVector& v, const SparseMatrix& a_transposed,
                 const Mask* mask, VectorRole role) {
  const Index n = a_transposed.size();
  detail::check_same_length(v.length(), n, "vxm: vector/matrix");
  if (mask != nullptr) detail::check_same_length(mask->length(), n, "vxm: mask");

  std::vector<Weight> dense(n, S::add_identity);
  std::vector<char> present(n, 0);
  auto idx = v.indices();
  auto val = v.values();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    dense[idx[k]] = val[k];
    present[idx[k]] = 1;
  }

  std::vector<Index> out_idx;
  std::vector<Weight> out_val;
  auto emit_row = [&](Index j) {
    RowView r = a_transposed.row(j);
    bool any = false;
    Weight acc = S::add_identity;
    for (std::size_t k = 0; k < r.size(); ++k) {
      Index i = r.cols[k];
      if (!present[i]) continue;
      acc = S::add(acc, S::multiply(dense[i], r.weights[k]));
      any = true;
    }
    if (any && !SparseVector::is_implicit(role, acc)) {
      out_idx.push_back(j);
      out_val.push_back(acc);
    }
  };
  if (mask != nullptr) {
    for (Index j : mask->indices()) emit_row(j);
  } else {
    for (Index j = 0; j < n; ++j) emit_row(j);
  }
  return SparseVector::from_sorted(n, std::move(out_idx), std::move(out_val), role);
}

}  // namespace dsssp

#endif  // DSSSP_OPS_HPP_
