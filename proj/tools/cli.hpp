#ifndef DSSSP_TOOLS_CLI_HPP_
#define DSSSP_TOOLS_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>

#include "dsssp/graph_io.hpp"
#include "dsssp/parallel.hpp"

namespace dsssp::cli {

enum ExitCode : int {
  kOk = 0,
  kLoadError = 1,
  kVerifyFailed = 2,
  kBadFlags = 3,
};

struct RunConfig {
  std::string graph;
  GraphFormat format = GraphFormat::kEdgeList;
  bool directed = false;
  std::uint64_t source = 0;
  Weight delta = 1.0;
  ExecutionConfig execution;
  bool verify = false;
  unsigned repeat = 1;
  bool skip_empty_buckets = false;
  std::string output;  // empty: `out`
  // Perturbs one computed distance before verification.
  bool inject_fault = false;
};

struct SelftestConfig {
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  bool inject_fault = false;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int selftest(const SelftestConfig& config, std::ostream& out, std::ostream& err);

// Full command line entry point: `dsssp run ...` / `dsssp selftest ...`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dsssp::cli

#endif  // DSSSP_TOOLS_CLI_HPP_
