#include "dsssp/ops.hpp"

#include <algorithm>
#include <sstream>

namespace dsssp {
namespace detail {

void check_same_length(Index a, Index b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + " length mismatch (" +
                            std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail

namespace {

std::string fmt(Weight x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Walks the entries of `in` that are also in `mask` (or all of them).
template <typename Fn>
void for_each_gated(const SparseVector& in, const Mask* mask, Fn&& fn) {
  auto idx = in.indices();
  auto val = in.values();
  if (mask == nullptr) {
    for (std::size_t k = 0; k < idx.size(); ++k) fn(idx[k], val[k]);
    return;
  }
  auto m = mask->indices();
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < idx.size() && b < m.size()) {
    if (idx[a] < m[b]) {
      ++a;
    } else if (m[b] < idx[a]) {
      ++b;
    } else {
      fn(idx[a], val[a]);
      ++a;
      ++b;
    }
  }
}

SparseVector apply_impl(const SparseVector& in, const UnaryOp& op, const Mask* mask) {
  if (mask != nullptr) detail::check_same_length(in.length(), mask->length(), "apply");
  std::vector<Index> idx;
  std::vector<Weight> val;
  for_each_gated(in, mask, [&](Index i, Weight x) {
    idx.push_back(i);
    val.push_back(op(x));
  });
  return SparseVector::from_sorted(in.length(), std::move(idx), std::move(val), in.role());
}

SparseVector apply_pred_impl(const SparseVector& in, const UnaryPredicate& pred,
                             const Mask* mask) {
  if (mask != nullptr) detail::check_same_length(in.length(), mask->length(), "apply");
  std::vector<Index> idx;
  std::vector<Weight> val;
  for_each_gated(in, mask, [&](Index i, Weight x) {
    idx.push_back(i);
    val.push_back(pred(x) ? 1.0 : 0.0);
  });
  return SparseVector::from_sorted(in.length(), std::move(idx), std::move(val),
                                   VectorRole::kValue);
}

SparseVector ewise_add_impl(const SparseVector& u, const SparseVector& v,
                            const BinaryOp& op, const Mask* mask) {
  detail::check_same_length(u.length(), v.length(), "ewise_add");
  if (mask != nullptr) detail::check_same_length(u.length(), mask->length(), "ewise_add mask");
  const VectorRole role = op.boolean_result ? VectorRole::kBoolean : u.role();

  auto ui = u.indices();
  auto uv = u.values();
  auto vi = v.indices();
  auto vv = v.values();
  std::vector<Index> idx;
  std::vector<Weight> val;
  idx.reserve(ui.size() + vi.size());
  val.reserve(ui.size() + vi.size());

  std::span<const Index> m = mask != nullptr ? mask->indices() : std::span<const Index>{};
  std::size_t mk = 0;
  auto allowed = [&](Index i) {
    if (mask == nullptr) return true;
    while (mk < m.size() && m[mk] < i) ++mk;
    return mk < m.size() && m[mk] == i;
  };

  std::size_t a = 0;
  std::size_t b = 0;
  while (a < ui.size() || b < vi.size()) {
    Index i;
    Weight out;
    if (b == vi.size() || (a < ui.size() && ui[a] < vi[b])) {
      i = ui[a];
      out = uv[a++];
    } else if (a == ui.size() || vi[b] < ui[a]) {
      i = vi[b];
      out = vv[b++];
    } else {
      i = ui[a];
      out = op(uv[a++], vv[b++]);
    }
    if (!allowed(i)) continue;
    idx.push_back(i);
    val.push_back(out);
  }
  return SparseVector::from_sorted(u.length(), std::move(idx), std::move(val), role);
}

}  // namespace

UnaryPredicate UnaryPredicate::always_true() {
  return {[](Weight) { return true; }, "true"};
}

UnaryPredicate UnaryPredicate::greater_than(Weight bound) {
  return {[bound](Weight x) { return x > bound; }, "x > " + fmt(bound)};
}

UnaryPredicate UnaryPredicate::less_equal(Weight bound) {
  return {[bound](Weight x) { return x <= bound; }, "x <= " + fmt(bound)};
}

UnaryPredicate UnaryPredicate::open_closed(Weight lo, Weight hi) {
  return {[lo, hi](Weight x) { return lo < x && x <= hi; },
          fmt(lo) + " < x <= " + fmt(hi)};
}

UnaryPredicate UnaryPredicate::closed_open(Weight lo, Weight hi) {
  return {[lo, hi](Weight x) { return lo <= x && x < hi; },
          fmt(lo) + " <= x < " + fmt(hi)};
}

BinaryOp BinaryOp::min() {
  return {[](Weight a, Weight b) { return std::min(a, b); }, "min", true, false};
}

BinaryOp BinaryOp::plus() {
  return {[](Weight a, Weight b) { return a + b; }, "plus", true, false};
}

BinaryOp BinaryOp::times() {
  return {[](Weight a, Weight b) { return a * b; }, "times", true, false};
}

BinaryOp BinaryOp::less_than() {
  return {[](Weight a, Weight b) { return a < b ? 1.0 : 0.0; }, "less_than", false, true};
}

SparseVector apply_vector(const SparseVector& in, const UnaryOp& op) {
  return apply_impl(in, op, nullptr);
}

SparseVector apply_vector(const SparseVector& in, const UnaryOp& op, const Mask& mask) {
  return apply_impl(in, op, &mask);
}

SparseVector apply_vector(const SparseVector& in, const UnaryPredicate& pred) {
  return apply_pred_impl(in, pred, nullptr);
}

SparseVector apply_vector(const SparseVector& in, const UnaryPredicate& pred,
                          const Mask& mask) {
  return apply_pred_impl(in, pred, &mask);
}

Mask filter_vector(const SparseVector& in, const UnaryPredicate& pred) {
  std::vector<Index> kept;
  auto idx = in.indices();
  auto val = in.values();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (pred(val[k])) kept.push_back(idx[k]);
  }
  return Mask::from_sorted(in.length(), std::move(kept));
}

SparseMatrix filter_matrix(const SparseMatrix& a, const UnaryPredicate& pred) {
  const Index n = a.size();
  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Index> cols;
  std::vector<Weight> weights;
  for (Index i = 0; i < n; ++i) {
    RowView r = a.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (!pred(r.weights[k])) continue;
      cols.push_back(r.cols[k]);
      weights.push_back(r.weights[k]);
    }
    offsets[i + 1] = cols.size();
  }
  return SparseMatrix::from_csr(n, std::move(offsets), std::move(cols), std::move(weights));
}

SparseVector ewise_add_vector(const SparseVector& u, const SparseVector& v,
                              const BinaryOp& op) {
  return ewise_add_impl(u, v, op, nullptr);
}

SparseVector ewise_add_vector(const SparseVector& u, const SparseVector& v,
                              const BinaryOp& op, const Mask& mask) {
  return ewise_add_impl(u, v, op, &mask);
}

SparseVector ewise_mult_vector(const SparseVector& u, const SparseVector& v,
                               const BinaryOp& op) {
  detail::check_same_length(u.length(), v.length(), "ewise_mult");
  const VectorRole role = op.boolean_result ? VectorRole::kBoolean : u.role();
  auto ui = u.indices();
  auto uv = u.values();
  auto vi = v.indices();
  auto vv = v.values();
  std::vector<Index> idx;
  std::vector<Weight> val;
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < ui.size() && b < vi.size()) {
    if (ui[a] < vi[b]) {
      ++a;
    } else if (vi[b] < ui[a]) {
      ++b;
    } else {
      idx.push_back(ui[a]);
      val.push_back(op(uv[a++], vv[b++]));
    }
  }
  return SparseVector::from_sorted(u.length(), std::move(idx), std::move(val), role);
}

SparseVector vxm_min_plus(const SparseVector& v, const SparseMatrix& a_transposed) {
  return vxm<MinPlus>(v, a_transposed, nullptr, VectorRole::kDistance);
}

SparseVector vxm_min_plus(const SparseVector& v, const SparseMatrix& a_transposed,
                          const Mask& mask) {
  return vxm<MinPlus>(v, a_transposed, &mask, VectorRole::kDistance);
}

}  // namespace dsssp
