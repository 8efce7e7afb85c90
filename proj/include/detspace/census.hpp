#pragma once

#include <utility>
#include <vector>

#include "detspace/util.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace detspace {

inline unsigned hardware_threads() {
#ifdef _OPENMP
  int t = omp_get_max_threads();
  return t > 0 ? static_cast<unsigned>(t) : 1u;
#else
  return 1;
#endif
}

// Reference kernel: visit every index in order, accumulating into one Acc.
template <typename Acc, typename Visit>
Acc scan_reduce_serial(u64 total, Acc init, Visit&& visit) {
  Acc acc = std::move(init);
  for (u64 i = 0; i < total; ++i) visit(i, acc);
  return acc;
}

// Parallel kernel: contiguous index chunks, one accumulator per thread,
// merged in chunk order so the result is deterministic and equals the serial
// kernel for any associative merge of an order-respecting visit.
template <typename Acc, typename Visit, typename Merge>
Acc scan_reduce_parallel(u64 total, const Acc& init, Visit&& visit,
                         Merge&& merge, unsigned threads = 0) {
#ifdef _OPENMP
  unsigned t = threads ? threads : hardware_threads();
  if (t > total) t = total ? static_cast<unsigned>(total) : 1;
  if (t <= 1) return scan_reduce_serial(total, Acc(init), visit);
  std::vector<Acc> locals(t, init);
#pragma omp parallel num_threads(t)
  {
    unsigned tid = static_cast<unsigned>(omp_get_thread_num());
    u64 lo = total * tid / t;
    u64 hi = total * (tid + 1) / t;
    Acc& acc = locals[tid];
    for (u64 i = lo; i < hi; ++i) visit(i, acc);
  }
  Acc out = std::move(locals[0]);
  for (unsigned i = 1; i < t; ++i) merge(out, std::move(locals[i]));
  return out;
#else
  (void)merge;
  (void)threads;
  return scan_reduce_serial(total, Acc(init), visit);
#endif
}

// Dispatcher used by the censuses; tiny scans stay serial.
template <typename Acc, typename Visit, typename Merge>
Acc scan_reduce(u64 total, Acc init, Visit&& visit, Merge&& merge,
                bool use_parallel, unsigned threads = 0) {
  if (use_parallel && total >= 1024)
    return scan_reduce_parallel(total, init, visit, merge, threads);
  return scan_reduce_serial(total, std::move(init), visit);
}

// count of indices satisfying pred
template <typename Pred>
u64 census_count(u64 total, Pred&& pred, bool use_parallel,
                 unsigned threads = 0) {
  return scan_reduce(
      total, u64{0},
      [&](u64 i, u64& acc) {
        if (pred(i)) ++acc;
      },
      [](u64& a, u64 b) { a += b; }, use_parallel, threads);
}

// histogram over buckets 0..nbuckets-1
template <typename BucketFn>
std::vector<u64> census_histogram(u64 total, unsigned nbuckets,
                                  BucketFn&& bucket, bool use_parallel,
                                  unsigned threads = 0) {
  return scan_reduce(
      total, std::vector<u64>(nbuckets, 0),
      [&](u64 i, std::vector<u64>& acc) { ++acc[bucket(i)]; },
      [](std::vector<u64>& a, std::vector<u64> b) {
        for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
      },
      use_parallel, threads);
}

// indices satisfying pred, in increasing order
template <typename Pred>
std::vector<u64> census_collect(u64 total, Pred&& pred, bool use_parallel,
                                unsigned threads = 0) {
  return scan_reduce(
      total, std::vector<u64>{},
      [&](u64 i, std::vector<u64>& acc) {
        if (pred(i)) acc.push_back(i);
      },
      [](std::vector<u64>& a, std::vector<u64> b) {
        a.insert(a.end(), b.begin(), b.end());
      },
      use_parallel, threads);
}

}  // namespace detspace
