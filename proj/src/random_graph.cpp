#include "dsssp/random_graph.hpp"

#include <random>
#include <vector>

namespace dsssp {

SparseMatrix random_graph(const RandomGraphSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> vertex(0, spec.vertices - 1);
  std::uniform_int_distribution<int> integer_weight(1, 10);
  std::uniform_real_distribution<Weight> unit(0.0, 1.0);
  auto weight = [&]() -> Weight {
    switch (spec.weights) {
      case WeightKind::kUnit:
        return 1.0;
      case WeightKind::kInteger:
        return integer_weight(rng);
      case WeightKind::kReal:
        // 1 - U[0,1) lies in (0, 1].
        return 10.0 * (1.0 - unit(rng));
    }
    return 1.0;
  };

  std::vector<Triple> triples;
  triples.reserve(spec.edges + (spec.connected ? 2 * spec.vertices : 0));
  if (spec.connected) {
    for (Index v = 1; v < spec.vertices; ++v) {
      Index parent = std::uniform_int_distribution<Index>(0, v - 1)(rng);
      Weight w = weight();
      triples.push_back({parent, v, w});
      triples.push_back({v, parent, w});
    }
  }
  for (std::size_t k = 0; k < spec.edges; ++k) {
    Index u = vertex(rng);
    Index v = vertex(rng);
    if (u == v) continue;
    triples.push_back({u, v, weight()});
  }
  return SparseMatrix::build(spec.vertices, triples);
}

}  // namespace dsssp
