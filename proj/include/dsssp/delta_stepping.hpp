#ifndef DSSSP_DELTA_STEPPING_HPP_
#define DSSSP_DELTA_STEPPING_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "dsssp/buckets.hpp"
#include "dsssp/parallel.hpp"
#include "dsssp/sparse_matrix.hpp"
#include "dsssp/sparse_vector.hpp"

namespace dsssp {

// Working set of the linear-algebraic delta-stepping loop.
//   t       tentative distances (absent = +inf)
//   t_req   requested distances of the latest relaxation
//   bucket  current bucket B_i as a mask
//   settled S, the vertices that passed through B_i in this outer iteration
struct SsspState {
  SparseVector t;
  SparseVector t_req;
  Mask bucket;
  Mask settled;
  EdgeSplit edges;
  std::uint64_t i = 0;
  Weight delta = 1.0;
  Index source = 0;
};

// A_L = A o (0 < A <= delta), A_H = A o (A > delta), each computed with
// filter_matrix, transposed views materialized. Throws for delta <= 0.
EdgeSplit split_edges(const SparseMatrix& a, Weight delta);

// { v : i*delta <= t[v] < (i+1)*delta } over stored entries of t.
Mask compute_bucket(const SparseVector& t, std::uint64_t i, Weight delta);

// t = {source: 0}, i = 0, empty bucket and S. Validates source and delta.
SsspState initial_state(const SparseMatrix& a, Index source, Weight delta,
                        const ExecutionConfig& config = {});

// One body of the inner loop:
//   t_req  = A_L^T (t o t_Bi)
//   S      = S | t_Bi
//   t_Bi   = (i*delta <= t_req < (i+1)*delta) o (t_req < t)
//   t      = min(t, t_req)
void relax_light_phase(SsspState& state, const ExecutionConfig& config = {});

// t_req = A_H^T (t o S); t = min(t, t_req). S is left as is.
void relax_heavy(SsspState& state, const ExecutionConfig& config = {});

enum class SsspEvent {
  kBucketOpened,    // bucket i computed, before any light phase
  kLightPhaseDone,  // after each relax_light_phase
  kHeavyDone,       // after relax_heavy, before i advances
};

struct DeltaSteppingOptions {
  ExecutionConfig execution;
  // Jump i straight to the next bucket holding a stored distance instead of
  // stepping through empty ones. Distances are unaffected.
  bool skip_empty_buckets = false;
  std::function<void(SsspEvent, const SsspState&)> observer;
};

struct SsspResult {
  SparseVector distances;  // unreachable vertices are absent
  std::size_t outer_iterations = 0;
  std::size_t inner_phases = 0;
  std::vector<std::size_t> light_phases_per_bucket;
  std::chrono::nanoseconds elapsed{0};
};

// Full algorithm. Loops while some stored t value is >= i*delta. Elapsed time
// covers the edge split and the main loop. Throws std::out_of_range for a
// bad source and std::invalid_argument for delta <= 0 or a bad config.
SsspResult delta_stepping(const SparseMatrix& a, Index source, Weight delta,
                          const DeltaSteppingOptions& options = {});

// Textbook binary-heap Dijkstra. Unreachable vertices are absent.
SparseVector dijkstra_oracle(const SparseMatrix& a, Index source);

}  // namespace dsssp

#endif  // DSSSP_DELTA_STEPPING_HPP_
