#ifndef DSSSP_GRAPH_IO_HPP_
#define DSSSP_GRAPH_IO_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dsssp/sparse_matrix.hpp"

namespace dsssp {

enum class GraphFormat { kMatrixMarket, kEdgeList };

// Malformed input. line() is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input carrying an unusable value (weight <= 0, non-finite).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Bijection between external vertex labels and dense internal ids [0, n).
class LabelMap {
 public:
  // Returns the id of `label`, assigning the next free id on first sight.
  Index intern(std::uint64_t label);

  std::optional<Index> find(std::uint64_t label) const;
  std::uint64_t label_of(Index id) const { return labels_.at(id); }
  Index size() const { return static_cast<Index>(labels_.size()); }

  static LabelMap identity(Index n, std::uint64_t first_label = 0);

 private:
  std::unordered_map<std::uint64_t, Index> ids_;
  std::vector<std::uint64_t> labels_;
};

struct LoadOptions {
  bool directed = true;         // edge lists only
  Weight default_weight = 1.0;  // pattern files and two-column lines
};

struct LoadedGraph {
  SparseMatrix matrix;
  LabelMap labels;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_combined = 0;
};

// "%%MatrixMarket matrix coordinate (real|integer|pattern)
// (general|symmetric)". Labels are the file's 1-based indices.
LoadedGraph load_matrix_market(std::istream& in, const LoadOptions& options = {});

// SNAP-style "u v [w]" lines; '#' and '%' start comment lines. Labels are
// remapped densely in first-seen order.
LoadedGraph load_edge_list(std::istream& in, const LoadOptions& options = {});

// Opens `path` ("-" reads standard input) and dispatches on format.
LoadedGraph load_graph(const std::string& path, GraphFormat format,
                       const LoadOptions& options = {});

struct LabeledEdge {
  std::uint64_t from;
  std::uint64_t to;
  Weight weight;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// Stored edges mapped back to external labels, in internal row-major order.
std::vector<LabeledEdge> export_edges(const LoadedGraph& graph);

}  // namespace dsssp

#endif  // DSSSP_GRAPH_IO_HPP_
