// Benchmark harness comparing the serial reference kernels against the
// OpenMP-partitioned ones on census workloads. Both paths must produce
// identical counts; the tool exits nonzero on any mismatch, so it doubles as
// an equivalence check at sizes the unit tests do not reach.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "detspace/census.hpp"
#include "detspace/detkit.hpp"
#include "detspace/version.hpp"

using namespace detspace;

namespace {

int g_mismatches = 0;

MatSubspace full_space(const FieldPtr& f, unsigned n) {
  std::vector<Matrix> basis;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Matrix m(f, n, n);
      m.set(i, j, 1);
      basis.push_back(m);
    }
  return MatSubspace::make(f, n, std::move(basis));
}

MatSubspace skew_space(const FieldPtr& f, unsigned n) {
  std::vector<Matrix> basis;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      Matrix m(f, n, n);
      m.set(i, j, 1);
      m.set(j, i, f->neg(1));
      basis.push_back(m);
    }
  return MatSubspace::make(f, n, std::move(basis));
}

template <typename Fn>
double time_ms(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  std::chrono::duration<double, std::milli> dt =
      std::chrono::steady_clock::now() - t0;
  return dt.count();
}

void report(const std::string& label, u64 total, double serial_ms,
            double parallel_ms, bool agree) {
  std::printf("%-34s %10llu %10.1f ms %10.1f ms %7.2fx   %s\n", label.c_str(),
              static_cast<unsigned long long>(total), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              agree ? "agree" : "MISMATCH");
  if (!agree) ++g_mismatches;
}

void bench_zero_census(u64 q, unsigned threads) {
  MatSubspace sub = full_space(Field::prime_field(q), 2);
  MultiPoly p = det_poly(sub);
  Config serial_cfg, parallel_cfg;
  serial_cfg.use_parallel = false;
  parallel_cfg.use_parallel = true;
  parallel_cfg.threads = threads;
  ZeroCensus a, b;
  double sms = time_ms([&] { a = zero_census(p, CensusMode::affine, serial_cfg); });
  double pms = time_ms([&] { b = zero_census(p, CensusMode::affine, parallel_cfg); });
  report("affine census, 2x2 over F_" + std::to_string(q), pow_u64(q, 4), sms,
         pms, a.N_affine == b.N_affine);
}

void bench_rank_census(unsigned threads) {
  MatSubspace sub = skew_space(Field::prime_field(2), 6);
  Config serial_cfg, parallel_cfg;
  serial_cfg.use_parallel = false;
  parallel_cfg.use_parallel = true;
  parallel_cfg.threads = threads;
  RankCensus a, b;
  double sms = time_ms([&] { a = rank_census(sub, serial_cfg); });
  double pms = time_ms([&] { b = rank_census(sub, parallel_cfg); });
  report("rank census, skew 6x6 over F_2", sub.point_count(), sms, pms,
         a.counts == b.counts);
}

void bench_raw_kernel(u64 total, unsigned threads) {
  auto pred = [](u64 i) {
    // cheap mixing predicate, branch-free arithmetic only
    u64 z = i + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return ((z ^ (z >> 31)) & 7) == 0;
  };
  u64 a = 0, b = 0;
  double sms = time_ms([&] { a = census_count(total, pred, false); });
  double pms = time_ms([&] { b = census_count(total, pred, true, threads); });
  report("raw count kernel, mixed bits", total, sms, pms, a == b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial versus OpenMP census kernels"};
  unsigned threads = 0;
  u64 raw_total = u64(1) << 23;
  std::vector<u64> qs = {11, 23, 31};
  app.add_option("--threads", threads, "worker threads (0 = machine parallelism)");
  app.add_option("--raw-total", raw_total, "index count for the raw kernel row");
  app.add_option("--q", qs, "field sizes for the 2x2 census rows");
  CLI11_PARSE(app, argc, argv);

  std::printf("detspace %s, %u hardware thread(s)\n", kVersion,
              hardware_threads());
  std::printf("%-34s %10s %13s %13s %8s   %s\n", "workload", "points",
              "serial", "parallel", "speedup", "check");
  for (u64 q : qs) bench_zero_census(q, threads);
  bench_rank_census(threads);
  bench_raw_kernel(raw_total, threads);
  if (g_mismatches) {
    std::printf("%d workload(s) disagree between kernels\n", g_mismatches);
    return 1;
  }
  return 0;
}
