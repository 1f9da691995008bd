#include "dsssp/verify.hpp"

#include <algorithm>
#include <cmath>

namespace dsssp {

DistanceComparison compare_distances(const SparseVector& got, const SparseVector& want,
                                     Weight rel_tol) {
  DistanceComparison c;
  auto gi = got.indices();
  auto gv = got.values();
  auto wi = want.indices();
  auto wv = want.values();
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < gi.size() || b < wi.size()) {
    if (b == wi.size() || (a < gi.size() && gi[a] < wi[b])) {
      ++c.reachability_mismatches;
      ++a;
    } else if (a == gi.size() || wi[b] < gi[a]) {
      ++c.reachability_mismatches;
      ++b;
    } else {
      const Weight dev = std::abs(gv[a] - wv[b]);
      c.max_abs_deviation = std::max(c.max_abs_deviation, dev);
      if (!(dev <= rel_tol * (1.0 + std::abs(wv[b])))) ++c.value_mismatches;
      ++a;
      ++b;
    }
  }
  if (got.length() != want.length()) ++c.reachability_mismatches;
  c.ok = c.reachability_mismatches == 0 && c.value_mismatches == 0;
  return c;
}

}  // namespace dsssp
