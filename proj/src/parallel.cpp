#include "dsssp/parallel.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace dsssp {

void validate(const ExecutionConfig& config) {
  if (config.workers == 0) throw std::invalid_argument("worker count must be >= 1");
  if (config.chunks_per_worker == 0) {
    throw std::invalid_argument("chunks per worker must be >= 1");
  }
}

std::vector<IndexRange> partition_evenly(Index length, std::size_t tasks) {
  std::vector<IndexRange> out;
  if (length == 0 || tasks == 0) return out;
  const std::size_t count = std::min<std::size_t>(tasks, length);
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    auto lo = static_cast<Index>(r * length / count);
    auto hi = static_cast<Index>((r + 1) * length / count);
    out.push_back({lo, hi});
  }
  return out;
}

namespace detail {

void run_tasks(std::size_t count, unsigned workers, void (*body)(void*, std::size_t),
               void* ctx) {
  const auto limit = static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
  const auto threads =
      static_cast<int>(std::min({static_cast<std::size_t>(workers), count, limit}));
  if (threads <= 1) {
    for (std::size_t r = 0; r < count; ++r) body(ctx, r);
    return;
  }
  const auto n = static_cast<long long>(count);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (long long r = 0; r < n; ++r) body(ctx, static_cast<std::size_t>(r));
}

}  // namespace detail
}  // namespace dsssp
