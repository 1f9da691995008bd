#include "dsssp/fused.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <memory>
#include <span>

#include "dsssp/ops.hpp"

namespace dsssp {
namespace {

// Push from the frontier when its out-edges are this many times cheaper than
// a full pull.
constexpr std::size_t kPushFactor = 4;

struct VectorPart {
  std::vector<Index> idx;
  std::vector<Weight> val;
};

// Position range of the sorted `indices` that falls inside `range`.
std::pair<std::size_t, std::size_t> slice(std::span<const Index> indices,
                                          IndexRange range) {
  auto b = std::lower_bound(indices.begin(), indices.end(), range.begin);
  auto e = std::lower_bound(b, indices.end(), range.end);
  return {static_cast<std::size_t>(b - indices.begin()),
          static_cast<std::size_t>(e - indices.begin())};
}

// Sorted union of two index slices.
void merge_union(std::span<const Index> x, std::pair<std::size_t, std::size_t> xs,
                 std::span<const Index> y, std::pair<std::size_t, std::size_t> ys,
                 std::vector<Index>& out) {
  out.reserve(out.size() + (xs.second - xs.first) + (ys.second - ys.first));
  std::set_union(x.begin() + xs.first, x.begin() + xs.second, y.begin() + ys.first,
                 y.begin() + ys.second, std::back_inserter(out));
}

// Number of distinct indices of x and y inside `range`.
std::size_t union_count(std::span<const Index> x, std::span<const Index> y, IndexRange range) {
  const auto [x_begin, x_end] = slice(x, range);
  const auto [y_begin, y_end] = slice(y, range);
  std::size_t common = 0;
  std::size_t a = x_begin;
  for (std::size_t r = y_begin; r < y_end && a < x_end; ++r) {
    a = static_cast<std::size_t>(std::lower_bound(x.begin() + a, x.begin() + x_end, y[r]) -
                                 x.begin());
    if (a < x_end && x[a] == y[r]) ++common;
  }
  return (x_end - x_begin) + (y_end - y_begin) - common;
}

// Writes min(t, t_req) over `range` to out_idx/out_val and calls
// on_request(k, req, t_k) for each request, t_k = +inf where t is absent.
// Runs of t between requests are copied in bulk.
template <typename OnRequest>
void merge_min_range(std::span<const Index> ti, std::span<const Weight> tv,
                     std::span<const Index> ri, std::span<const Weight> rv, IndexRange range,
                     Index* out_idx, Weight* out_val, OnRequest&& on_request) {
  auto [a, a_end] = slice(ti, range);
  auto [r, r_end] = slice(ri, range);
  auto copy_t = [&](std::size_t to) {
    out_idx = std::copy(ti.begin() + a, ti.begin() + to, out_idx);
    out_val = std::copy(tv.begin() + a, tv.begin() + to, out_val);
    a = to;
  };
  for (; r < r_end; ++r) {
    const Index k = ri[r];
    copy_t(static_cast<std::size_t>(std::lower_bound(ti.begin() + a, ti.begin() + a_end, k) -
                                    ti.begin()));
    const bool has_t = a < a_end && ti[a] == k;
    const Weight tk = has_t ? tv[a] : kInfinity;
    on_request(k, rv[r], tk);
    *out_idx++ = k;
    *out_val++ = has_t ? std::min(tk, rv[r]) : rv[r];
    if (has_t) ++a;
  }
  copy_t(a_end);
}

// Output offsets of each task range for a merge of t and t_req.
std::vector<std::size_t> merge_offsets(std::span<const Index> ti, std::span<const Index> ri,
                                       Index n, const ExecutionConfig& config) {
  auto counts = parallel_execute(n, config, [&](IndexRange range) {
    return union_count(ti, ri, range);
  });
  std::vector<std::size_t> offsets(counts.size() + 1, 0);
  for (std::size_t k = 0; k < counts.size(); ++k) offsets[k + 1] = offsets[k] + counts[k];
  return offsets;
}

template <typename Part>
std::size_t total_size(const std::vector<Part>& parts, auto member) {
  std::size_t n = 0;
  for (const Part& p : parts) n += (p.*member).size();
  return n;
}

template <typename T, typename Part>
std::vector<T> concat(std::vector<Part>& parts, std::vector<T> Part::*member) {
  if (parts.size() == 1) return std::move(parts.front().*member);
  std::vector<T> out;
  out.reserve(total_size(parts, member));
  for (Part& p : parts) {
    auto& v = p.*member;
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace

SparseVector fused_masked_relax(const SparseVector& t, const Mask& bucket,
                                const SparseMatrix& a, const ExecutionConfig& config) {
  const Index n = a.size();
  detail::check_same_length(t.length(), n, "fused_masked_relax: t/matrix");
  detail::check_same_length(bucket.length(), n, "fused_masked_relax: bucket/matrix");
  if (bucket.empty()) return SparseVector(n, VectorRole::kDistance);

  // Live sources: bucket entries that carry a distance.
  std::vector<Index> from;
  std::vector<Weight> dist;
  std::size_t frontier_edges = 0;
  {
    auto ti = t.indices();
    auto tv = t.values();
    std::size_t pos = 0;
    for (Index v : bucket.indices()) {
      pos = static_cast<std::size_t>(std::lower_bound(ti.begin() + pos, ti.end(), v) -
                                     ti.begin());
      if (pos == ti.size()) break;
      if (ti[pos] != v) continue;
      from.push_back(v);
      dist.push_back(tv[pos]);
      frontier_edges += a.row(v).size();
    }
  }
  if (from.empty()) return SparseVector(n, VectorRole::kDistance);

  if (kPushFactor * frontier_edges < a.nnz() + n) {
    // Tasks split the frontier; each sorts and min-reduces its candidates and
    // the sorted parts are merged in order.
    auto parts = parallel_execute(static_cast<Index>(from.size()), config, [&](IndexRange range) {
      std::vector<Entry> cand;
      for (Index f = range.begin; f < range.end; ++f) {
        RowView r = a.row(from[f]);
        for (std::size_t k = 0; k < r.size(); ++k) {
          cand.push_back({r.cols[k], dist[f] + r.weights[k]});
        }
      }
      std::sort(cand.begin(), cand.end(), [](const Entry& x, const Entry& y) {
        return x.index < y.index || (x.index == y.index && x.value < y.value);
      });
      cand.erase(std::unique(cand.begin(), cand.end(),
                             [](const Entry& x, const Entry& y) { return x.index == y.index; }),
                 cand.end());
      return cand;
    });
    std::vector<Entry> merged = std::move(parts.front());
    std::vector<Entry> scratch;
    for (std::size_t p = 1; p < parts.size(); ++p) {
      scratch.clear();
      scratch.reserve(merged.size() + parts[p].size());
      auto x = merged.begin();
      auto y = parts[p].begin();
      while (x != merged.end() || y != parts[p].end()) {
        if (y == parts[p].end() || (x != merged.end() && x->index < y->index)) {
          scratch.push_back(*x++);
        } else if (x == merged.end() || y->index < x->index) {
          scratch.push_back(*y++);
        } else {
          scratch.push_back({x->index, std::min(x->value, y->value)});
          ++x;
          ++y;
        }
      }
      merged.swap(scratch);
    }
    std::vector<Index> idx(merged.size());
    std::vector<Weight> val(merged.size());
    for (std::size_t k = 0; k < merged.size(); ++k) {
      idx[k] = merged[k].index;
      val[k] = merged[k].value;
    }
    return SparseVector::from_sorted(n, std::move(idx), std::move(val), VectorRole::kDistance);
  }

  // Pull over the transpose, testing a bitmap of live sources per edge.
  const SparseMatrix& at = a.transpose();
  std::unique_ptr<Weight[]> source(new Weight[n]);
  std::vector<std::uint64_t> live((static_cast<std::size_t>(n) + 63) / 64, 0);
  for (std::size_t f = 0; f < from.size(); ++f) {
    source[from[f]] = dist[f];
    live[from[f] >> 6] |= std::uint64_t{1} << (from[f] & 63);
  }
  auto parts = parallel_execute(n, config, [&](IndexRange range) {
    VectorPart part;
    for (Index j = range.begin; j < range.end; ++j) {
      RowView r = at.row(j);
      Weight acc = kInfinity;
      bool any = false;
      for (std::size_t k = 0; k < r.size(); ++k) {
        const Index i = r.cols[k];
        if ((live[i >> 6] >> (i & 63) & 1) == 0) continue;
        acc = std::min(acc, source[i] + r.weights[k]);
        any = true;
      }
      if (any) {
        part.idx.push_back(j);
        part.val.push_back(acc);
      }
    }
    return part;
  });
  return SparseVector::from_sorted(n, concat(parts, &VectorPart::idx),
                                   concat(parts, &VectorPart::val),
                                   VectorRole::kDistance);
}

BucketUpdate fused_bucket_update(const SparseVector& t, const SparseVector& t_req,
                                 const Mask& settled, const Mask& old_bucket,
                                 std::uint64_t i, Weight delta,
                                 const ExecutionConfig& config) {
  const Index n = t.length();
  detail::check_same_length(t_req.length(), n, "fused_bucket_update: t_req");
  detail::check_same_length(settled.length(), n, "fused_bucket_update: settled");
  detail::check_same_length(old_bucket.length(), n, "fused_bucket_update: bucket");
  const BucketRange bounds = bucket_range(i, delta);

  struct Part {
    std::vector<Index> bucket;
    std::vector<Index> settled;
  };

  auto ti = t.indices();
  auto tv = t.values();
  auto ri = t_req.indices();
  auto rv = t_req.values();
  auto si = settled.indices();
  auto oi = old_bucket.indices();

  const std::vector<std::size_t> offsets = merge_offsets(ti, ri, n, config);
  std::vector<Index> t_idx(offsets.back());
  std::vector<Weight> t_val(offsets.back());
  auto parts = parallel_execute(n, config, [&](IndexRange range, std::size_t task) {
    Part part;
    merge_union(si, slice(si, range), oi, slice(oi, range), part.settled);
    merge_min_range(ti, tv, ri, rv, range, t_idx.data() + offsets[task],
                    t_val.data() + offsets[task], [&](Index k, Weight req, Weight tk) {
                      if (req < tk && bounds.contains(req)) part.bucket.push_back(k);
                    });
    return part;
  });

  BucketUpdate out;
  out.t = SparseVector::from_sorted(n, std::move(t_idx), std::move(t_val),
                                    VectorRole::kDistance);
  out.bucket = Mask::from_sorted(n, concat(parts, &Part::bucket));
  out.settled = Mask::from_sorted(n, concat(parts, &Part::settled));
  return out;
}

SparseVector fused_min_merge(const SparseVector& t, const SparseVector& t_req,
                             const ExecutionConfig& config) {
  const Index n = t.length();
  detail::check_same_length(t_req.length(), n, "fused_min_merge");
  auto ti = t.indices();
  auto tv = t.values();
  auto ri = t_req.indices();
  auto rv = t_req.values();
  const std::vector<std::size_t> offsets = merge_offsets(ti, ri, n, config);
  std::vector<Index> idx(offsets.back());
  std::vector<Weight> val(offsets.back());
  parallel_execute(n, config, [&](IndexRange range, std::size_t task) {
    merge_min_range(ti, tv, ri, rv, range, idx.data() + offsets[task],
                    val.data() + offsets[task], [](Index, Weight, Weight) {});
    return 0;
  });
  return SparseVector::from_sorted(n, std::move(idx), std::move(val), VectorRole::kDistance);
}

EdgeSplit fused_split_edges(const SparseMatrix& a, Weight delta,
                            const ExecutionConfig& config) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const Index n = a.size();

  struct Part {
    std::vector<std::size_t> light_counts;
    std::vector<Index> light_cols;
    std::vector<Weight> light_w;
    std::vector<std::size_t> heavy_counts;
    std::vector<Index> heavy_cols;
    std::vector<Weight> heavy_w;
  };
  auto parts = parallel_execute(n, config, [&](IndexRange range) {
    Part part;
    part.light_counts.reserve(range.end - range.begin);
    part.heavy_counts.reserve(range.end - range.begin);
    for (Index i = range.begin; i < range.end; ++i) {
      RowView r = a.row(i);
      std::size_t light_before = part.light_cols.size();
      std::size_t heavy_before = part.heavy_cols.size();
      for (std::size_t k = 0; k < r.size(); ++k) {
        const Weight w = r.weights[k];
        if (0.0 < w && w <= delta) {
          part.light_cols.push_back(r.cols[k]);
          part.light_w.push_back(w);
        } else if (w > delta) {
          part.heavy_cols.push_back(r.cols[k]);
          part.heavy_w.push_back(w);
        }
      }
      part.light_counts.push_back(part.light_cols.size() - light_before);
      part.heavy_counts.push_back(part.heavy_cols.size() - heavy_before);
    }
    return part;
  });

  auto offsets_of = [&](std::vector<std::size_t> Part::*counts) {
    std::vector<std::size_t> offsets;
    offsets.reserve(static_cast<std::size_t>(n) + 1);
    offsets.push_back(0);
    for (Part& p : parts) {
      for (std::size_t c : p.*counts) offsets.push_back(offsets.back() + c);
    }
    return offsets;
  };

  EdgeSplit split;
  split.delta = delta;
  split.light = SparseMatrix::from_csr(n, offsets_of(&Part::light_counts),
                                       concat(parts, &Part::light_cols),
                                       concat(parts, &Part::light_w));
  split.heavy = SparseMatrix::from_csr(n, offsets_of(&Part::heavy_counts),
                                       concat(parts, &Part::heavy_cols),
                                       concat(parts, &Part::heavy_w));
  const SparseMatrix* both[2] = {&split.light, &split.heavy};
  detail::run_tasks(
      2, std::min(config.workers, 2u),
      [](void* p, std::size_t k) { static_cast<const SparseMatrix**>(p)[k]->transpose(); },
      both);
  return split;
}

}  // namespace dsssp
