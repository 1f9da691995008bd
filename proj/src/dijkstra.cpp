#include <functional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "dsssp/delta_stepping.hpp"

namespace dsssp {

SparseVector dijkstra_oracle(const SparseMatrix& a, Index source) {
  const Index n = a.size();
  if (source >= n) {
    throw std::out_of_range("source " + std::to_string(source) +
                            " out of range for " + std::to_string(n) + " vertices");
  }
  std::vector<Weight> dist(n, kInfinity);
  std::vector<char> done(n, 0);
  using Item = std::pair<Weight, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    RowView r = a.row(u);
    for (std::size_t k = 0; k < r.size(); ++k) {
      const Index v = r.cols[k];
      const Weight nd = d + r.weights[k];
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.push({nd, v});
      }
    }
  }

  std::vector<Index> idx;
  std::vector<Weight> val;
  for (Index v = 0; v < n; ++v) {
    if (dist[v] == kInfinity) continue;
    idx.push_back(v);
    val.push_back(dist[v]);
  }
  return SparseVector::from_sorted(n, std::move(idx), std::move(val));
}

}  // namespace dsssp
