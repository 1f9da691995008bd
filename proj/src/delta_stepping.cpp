#include "dsssp/delta_stepping.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dsssp/fused.hpp"
#include "dsssp/ops.hpp"

namespace dsssp {
namespace {

void check_delta(Weight delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("delta must be positive and finite");
  }
}

// (t >= i*delta) != 0, evaluated over stored entries only.
bool has_pending(const SparseVector& t, Weight lo) {
  auto v = t.values();
  return std::any_of(v.begin(), v.end(), [lo](Weight x) { return x >= lo; });
}

// Smallest bucket index >= i that holds a stored distance. Requires
// has_pending(t, bucket_range(i).lo).
std::uint64_t next_nonempty_bucket(const SparseVector& t, std::uint64_t i, Weight delta) {
  const Weight lo = bucket_range(i, delta).lo;
  Weight next = kInfinity;
  for (Weight x : t.values()) {
    if (x >= lo) next = std::min(next, x);
  }
  auto k = static_cast<std::uint64_t>(std::floor(next / delta));
  while (k > 0 && bucket_range(k, delta).lo > next) --k;
  while (!(next < bucket_range(k, delta).hi)) ++k;
  return std::max(k, i);
}

}  // namespace

EdgeSplit split_edges(const SparseMatrix& a, Weight delta) {
  check_delta(delta);
  EdgeSplit split;
  split.delta = delta;
  split.light = filter_matrix(a, UnaryPredicate::open_closed(0.0, delta));
  split.heavy = filter_matrix(a, UnaryPredicate::greater_than(delta));
  split.light.transpose();
  split.heavy.transpose();
  return split;
}

Mask compute_bucket(const SparseVector& t, std::uint64_t i, Weight delta) {
  const BucketRange r = bucket_range(i, delta);
  return filter_vector(t, UnaryPredicate::closed_open(r.lo, r.hi));
}

SsspState initial_state(const SparseMatrix& a, Index source, Weight delta,
                        const ExecutionConfig& config) {
  check_delta(delta);
  validate(config);
  const Index n = a.size();
  if (source >= n) {
    throw std::out_of_range("source " + std::to_string(source) +
                            " out of range for " + std::to_string(n) + " vertices");
  }
  SsspState state;
  state.edges = config.backend == Backend::kFused ? fused_split_edges(a, delta, config)
                                                  : split_edges(a, delta);
  const Entry origin{source, 0.0};
  state.t = SparseVector::build(n, std::span(&origin, 1));
  state.t_req = SparseVector(n);
  state.bucket = Mask(n);
  state.settled = Mask(n);
  state.i = 0;
  state.delta = delta;
  state.source = source;
  return state;
}

void relax_light_phase(SsspState& state, const ExecutionConfig& config) {
  if (config.backend == Backend::kFused) {
    state.t_req = fused_masked_relax(state.t, state.bucket, state.edges.light, config);
    BucketUpdate next = fused_bucket_update(state.t, state.t_req, state.settled,
                                            state.bucket, state.i, state.delta, config);
    state.t = std::move(next.t);
    state.bucket = std::move(next.bucket);
    state.settled = std::move(next.settled);
    return;
  }

  const Index n = state.t.length();
  SparseVector frontier =
      ewise_mult_vector(state.t, state.bucket.as_vector(), BinaryOp::times());
  state.t_req = vxm_min_plus(frontier, state.edges.light.transpose());

  state.settled = mask_union(state.settled, state.bucket);
  state.bucket = Mask(n);

  const BucketRange r = bucket_range(state.i, state.delta);
  Mask in_bucket = filter_vector(state.t_req, UnaryPredicate::closed_open(r.lo, r.hi));
  // Masked by dom(t_req): without it, entries present only in t would pass
  // through the comparison as their own (truthy) value.
  SparseVector improving = ewise_add_vector(state.t_req, state.t, BinaryOp::less_than(),
                                            Mask::structure_of(state.t_req));
  state.bucket = Mask::structure_of(
      ewise_mult_vector(in_bucket.as_vector(), improving, BinaryOp::times()));

  state.t = ewise_add_vector(state.t, state.t_req, BinaryOp::min());
}

void relax_heavy(SsspState& state, const ExecutionConfig& config) {
  if (config.backend == Backend::kFused) {
    state.t_req = fused_masked_relax(state.t, state.settled, state.edges.heavy, config);
    state.t = fused_min_merge(state.t, state.t_req, config);
    return;
  }
  SparseVector frontier =
      ewise_mult_vector(state.t, state.settled.as_vector(), BinaryOp::times());
  state.t_req = vxm_min_plus(frontier, state.edges.heavy.transpose());
  state.t = ewise_add_vector(state.t, state.t_req, BinaryOp::min());
}

SsspResult delta_stepping(const SparseMatrix& a, Index source, Weight delta,
                          const DeltaSteppingOptions& options) {
  const ExecutionConfig& config = options.execution;
  const auto start = std::chrono::steady_clock::now();
  SsspState state = initial_state(a, source, delta, config);
  const Index n = a.size();
  auto notify = [&](SsspEvent e) {
    if (options.observer) options.observer(e, state);
  };

  SsspResult result;
  while (has_pending(state.t, bucket_range(state.i, delta).lo)) {
    state.settled = Mask(n);
    state.bucket = compute_bucket(state.t, state.i, delta);
    if (state.bucket.empty() && options.skip_empty_buckets) {
      state.i = next_nonempty_bucket(state.t, state.i, delta);
      state.bucket = compute_bucket(state.t, state.i, delta);
    }
    notify(SsspEvent::kBucketOpened);

    std::size_t phases = 0;
    while (!state.bucket.empty()) {
      relax_light_phase(state, config);
      ++phases;
      notify(SsspEvent::kLightPhaseDone);
    }
    relax_heavy(state, config);
    notify(SsspEvent::kHeavyDone);

    result.light_phases_per_bucket.push_back(phases);
    result.inner_phases += phases;
    ++result.outer_iterations;
    ++state.i;
  }

  result.distances = std::move(state.t);
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace dsssp
