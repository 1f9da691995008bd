#ifndef DSSSP_RANDOM_GRAPH_HPP_
#define DSSSP_RANDOM_GRAPH_HPP_

#include <cstdint>

#include "dsssp/sparse_matrix.hpp"

namespace dsssp {

enum class WeightKind {
  kUnit,        // every weight 1.0
  kInteger,     // uniform in {1, ..., 10}
  kReal,        // uniform in (0, 10]
};

struct RandomGraphSpec {
  Index vertices = 1;
  std::size_t edges = 0;  // sampled edges, before self-loop/duplicate removal
  WeightKind weights = WeightKind::kInteger;
  bool connected = false;  // add an undirected random spanning tree first
};

// Directed graph with endpoints drawn uniformly. Deterministic per seed.
SparseMatrix random_graph(const RandomGraphSpec& spec, std::uint64_t seed);

}  // namespace dsssp

#endif  // DSSSP_RANDOM_GRAPH_HPP_
