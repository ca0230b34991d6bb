#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace arborist {

struct BenchConfig {
  std::size_t min_n = 100;
  std::size_t max_n = 1600;  // ladder doubles from min_n while <= max_n
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  double density = 1.0;
  bool digest = false;  // append a hash of each decode result
};

struct BenchRow {
  std::size_t n = 0;
  std::string algorithm;  // unconstrained | constrained | baseline
  double median_seconds = 0.0;
  std::uint64_t digest = 0;  // combined over trials
};

// Times the two decoders and the n-run baseline on seeded dense random
// graphs with uniform [0,1) weights. Short runs are repeated until they
// fill a measurable window; the median over trials is reported.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

// n,algorithm,median_seconds rows (plus digest when asked). Timing is the
// only nondeterministic field.
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows, bool digest);

// Least-squares slope of log(median_seconds) against log(n) for one
// algorithm's rows.
double log_log_slope(std::span<const BenchRow> rows, const std::string& algorithm);

}  // namespace arborist
