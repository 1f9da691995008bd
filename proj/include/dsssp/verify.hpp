#ifndef DSSSP_VERIFY_HPP_
#define DSSSP_VERIFY_HPP_

#include <cstddef>

#include "dsssp/sparse_vector.hpp"

namespace dsssp {

struct DistanceComparison {
  bool ok = true;
  std::size_t reachability_mismatches = 0;  // present in one vector only
  std::size_t value_mismatches = 0;
  Weight max_abs_deviation = 0.0;
};

// Accepts |got - want| <= rel_tol * (1 + |want|) at every index; both vectors
// must have the same domain. rel_tol = 0 demands exact equality.
DistanceComparison compare_distances(const SparseVector& got, const SparseVector& want,
                                     Weight rel_tol);

}  // namespace dsssp

#endif  // DSSSP_VERIFY_HPP_
