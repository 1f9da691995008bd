#include "dsssp/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dsssp {
namespace {

std::string with_line(std::size_t line, const std::string& what) {
  if (line == 0) return "end of input: " + what;
  return "line " + std::to_string(line) + ": " + what;
}

std::vector<std::string_view> tokenize(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    std::size_t b = k;
    while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    if (k > b) out.push_back(s.substr(b, k - b));
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected non-negative integer ") + what +
                               ", got '" + std::string(tok) + "'");
  }
  return value;
}

Weight parse_weight(std::string_view tok, std::size_t line) {
  Weight value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected numeric weight, got '" + std::string(tok) + "'");
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(line, "edge weight must be positive and finite, got '" +
                                    std::string(tok) + "'");
  }
  return value;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

LoadedGraph finish(Index n, const std::vector<Triple>& triples, LabelMap labels) {
  LoadedGraph g;
  BuildStats stats;
  g.matrix = SparseMatrix::build(n, triples, &stats);
  g.labels = std::move(labels);
  g.self_loops_dropped = stats.self_loops_dropped;
  g.duplicates_combined = stats.duplicates_combined;
  return g;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(with_line(line, what)), line_(line) {}

ValidationError::ValidationError(std::size_t line, const std::string& what)
    : std::runtime_error(with_line(line, what)), line_(line) {}

Index LabelMap::intern(std::uint64_t label) {
  auto [it, inserted] = ids_.try_emplace(label, static_cast<Index>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return it->second;
}

std::optional<Index> LabelMap::find(std::uint64_t label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

LabelMap LabelMap::identity(Index n, std::uint64_t first_label) {
  LabelMap m;
  m.labels_.reserve(n);
  for (Index i = 0; i < n; ++i) m.intern(first_label + i);
  return m;
}

LoadedGraph load_matrix_market(std::istream& in, const LoadOptions& options) {
  if (!(options.default_weight > 0.0) || !std::isfinite(options.default_weight)) {
    throw std::invalid_argument("default weight must be positive and finite");
  }
  std::string text;
  std::size_t line_no = 0;

  if (!std::getline(in, text)) throw ParseError(0, "empty input, missing header");
  line_no = 1;
  auto header = tokenize(text);
  if (header.size() != 5 || header[0] != "%%MatrixMarket" || lower(header[1]) != "matrix" ||
      lower(header[2]) != "coordinate") {
    throw ParseError(1, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'");
  }
  const std::string field = lower(header[3]);
  const std::string symmetry = lower(header[4]);
  if (field != "real" && field != "integer" && field != "pattern") {
    throw ParseError(1, "unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw ParseError(1, "unsupported symmetry '" + symmetry + "'");
  }
  const bool pattern = field == "pattern";
  const bool symmetric = symmetry == "symmetric";

  bool have_size = false;
  std::uint64_t n = 0;
  std::uint64_t expected = 0;
  std::uint64_t seen = 0;
  std::vector<Triple> triples;
  while (std::getline(in, text)) {
    ++line_no;
    if (is_blank(text) || text.front() == '%') continue;
    auto tok = tokenize(text);
    if (!have_size) {
      if (tok.size() != 3) throw ParseError(line_no, "expected size line 'rows cols entries'");
      std::uint64_t rows = parse_uint(tok[0], line_no, "row count");
      std::uint64_t cols = parse_uint(tok[1], line_no, "column count");
      expected = parse_uint(tok[2], line_no, "entry count");
      if (rows != cols) throw ParseError(line_no, "adjacency matrix must be square");
      if (rows == 0) throw ParseError(line_no, "matrix has no vertices");
      if (rows > std::numeric_limits<Index>::max()) {
        throw ParseError(line_no, "too many vertices");
      }
      n = rows;
      have_size = true;
      triples.reserve(symmetric ? 2 * expected : expected);
      continue;
    }
    if (tok.size() != (pattern ? 2u : 3u)) {
      throw ParseError(line_no, pattern ? "expected 'row col'" : "expected 'row col value'");
    }
    if (seen == expected) {
      throw ParseError(line_no, "more entries than the declared " + std::to_string(expected));
    }
    std::uint64_t r = parse_uint(tok[0], line_no, "row index");
    std::uint64_t c = parse_uint(tok[1], line_no, "column index");
    if (r < 1 || r > n || c < 1 || c > n) {
      throw ParseError(line_no, "coordinate outside 1.." + std::to_string(n));
    }
    Weight w = pattern ? options.default_weight : parse_weight(tok[2], line_no);
    auto row = static_cast<Index>(r - 1);
    auto col = static_cast<Index>(c - 1);
    triples.push_back({row, col, w});
    if (symmetric && row != col) triples.push_back({col, row, w});
    ++seen;
  }
  if (!have_size) throw ParseError(0, "missing size line");
  if (seen != expected) {
    throw ParseError(0, "declared " + std::to_string(expected) + " entries, found " +
                            std::to_string(seen));
  }
  const auto order = static_cast<Index>(n);
  return finish(order, triples, LabelMap::identity(order, 1));
}

LoadedGraph load_edge_list(std::istream& in, const LoadOptions& options) {
  if (!(options.default_weight > 0.0) || !std::isfinite(options.default_weight)) {
    throw std::invalid_argument("default weight must be positive and finite");
  }
  LabelMap labels;
  std::vector<Triple> triples;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (is_blank(text)) continue;
    auto first = text.find_first_not_of(" \t\r");
    if (text[first] == '#' || text[first] == '%') continue;
    auto tok = tokenize(text);
    if (tok.size() != 2 && tok.size() != 3) {
      throw ParseError(line_no, "expected 'u v' or 'u v w'");
    }
    std::uint64_t u = parse_uint(tok[0], line_no, "vertex label");
    std::uint64_t v = parse_uint(tok[1], line_no, "vertex label");
    Weight w = tok.size() == 3 ? parse_weight(tok[2], line_no) : options.default_weight;
    Index a = labels.intern(u);
    Index b = labels.intern(v);
    triples.push_back({a, b, w});
    if (!options.directed && a != b) triples.push_back({b, a, w});
  }
  if (labels.size() == 0) throw ParseError(0, "edge list contains no edges");
  const Index n = labels.size();
  return finish(n, triples, std::move(labels));
}

LoadedGraph load_graph(const std::string& path, GraphFormat format,
                       const LoadOptions& options) {
  auto load = [&](std::istream& in) {
    return format == GraphFormat::kMatrixMarket ? load_matrix_market(in, options)
                                                : load_edge_list(in, options);
  };
  if (path == "-") return load(std::cin);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  return load(file);
}

std::vector<LabeledEdge> export_edges(const LoadedGraph& graph) {
  std::vector<LabeledEdge> out;
  out.reserve(graph.matrix.nnz());
  for (const Triple& t : graph.matrix.triples()) {
    out.push_back({graph.labels.label_of(t.row), graph.labels.label_of(t.col), t.weight});
  }
  return out;
}

}  // namespace dsssp
