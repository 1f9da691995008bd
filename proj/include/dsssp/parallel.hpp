#ifndef DSSSP_PARALLEL_HPP_
#define DSSSP_PARALLEL_HPP_

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "dsssp/types.hpp"

namespace dsssp {

enum class Backend { kUnfused, kFused };

// Backend selection plus task decomposition. The unfused backend always
// runs sequentially; workers only affect the fused kernels.
struct ExecutionConfig {
  Backend backend = Backend::kUnfused;
  unsigned workers = 1;
  unsigned chunks_per_worker = 1;

  std::size_t task_count() const {
    return static_cast<std::size_t>(workers) * chunks_per_worker;
  }
};

// Throws std::invalid_argument if workers or chunks_per_worker is zero.
void validate(const ExecutionConfig& config);

struct IndexRange {
  Index begin;
  Index end;
};

// Splits [0, length) into min(tasks, length) contiguous ranges whose widths
// differ by at most one.
std::vector<IndexRange> partition_evenly(Index length, std::size_t tasks);

namespace detail {
void run_tasks(std::size_t count, unsigned workers, void (*body)(void*, std::size_t),
               void* ctx);

template <typename Fn, bool kIndexed>
struct PartOf {
  using type = std::invoke_result_t<Fn&, IndexRange>;
};
template <typename Fn>
struct PartOf<Fn, true> {
  using type = std::invoke_result_t<Fn&, IndexRange, std::size_t>;
};
}  // namespace detail

// Runs fn(range) once per range of partition_evenly(length, task_count) on
// up to `workers` threads, further capped by the OpenMP thread limit
// (OMP_NUM_THREADS, else the processor count). Returns the per-range results
// in range order. fn may also take the range's position as a second argument.
// fn must only write to its own result.
template <typename Fn>
auto parallel_execute(Index length, const ExecutionConfig& config, Fn&& fn) {
  constexpr bool kIndexed = std::is_invocable_v<Fn&, IndexRange, std::size_t>;
  using Part = typename detail::PartOf<Fn, kIndexed>::type;
  std::vector<IndexRange> ranges = partition_evenly(length, config.task_count());
  std::vector<Part> parts(ranges.size());
  struct Ctx {
    const std::vector<IndexRange>* ranges;
    std::vector<Part>* parts;
    Fn* fn;
  } ctx{&ranges, &parts, &fn};
  detail::run_tasks(
      ranges.size(), config.workers,
      [](void* p, std::size_t r) {
        auto* c = static_cast<Ctx*>(p);
        if constexpr (kIndexed) {
          (*c->parts)[r] = (*c->fn)((*c->ranges)[r], r);
        } else {
          (*c->parts)[r] = (*c->fn)((*c->ranges)[r]);
        }
      },
      &ctx);
  return parts;
}

}  // namespace dsssp

#endif  // DSSSP_PARALLEL_HPP_
