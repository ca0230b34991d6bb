#include "arborist/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <ostream>

#include "arborist/decode.hpp"
#include "arborist/io.hpp"
#include "arborist/oracle.hpp"

namespace arborist {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  return splitmix(splitmix(seed ^ (0x51ed2701ULL * n)) + trial);
}

std::uint64_t selection_digest(const EdgeSelection& sel) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
  };
  for (EdgeId id : sel.chosen) mix(id);
  std::uint64_t bits;
  static_assert(sizeof bits == sizeof sel.total_weight);
  std::memcpy(&bits, &sel.total_weight, sizeof bits);
  mix(bits);
  return h;
}

double now_between(std::chrono::steady_clock::time_point a,
                   std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

// Repeats sub-window runs until the clock resolution stops mattering.
template <typename Fn>
double timed(Fn&& fn) {
  constexpr double window = 2e-3;
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  double once = now_between(t0, t1);
  if (once >= window) return once;
  std::size_t reps = static_cast<std::size_t>(window / std::max(once, 1e-9)) + 1;
  t0 = std::chrono::steady_clock::now();
  for (std::size_t r = 0; r < reps; ++r) fn();
  t1 = std::chrono::steady_clock::now();
  return now_between(t0, t1) / static_cast<double>(reps);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.min_n == 0 || cfg.trials == 0) raise(Errc::precondition, "min_n and trials must be positive");
  std::vector<BenchRow> rows;
  static const char* const kAlgos[] = {"unconstrained", "constrained", "baseline"};

  for (std::size_t n = cfg.min_n; n >= cfg.min_n && n <= cfg.max_n; n *= 2) {
    std::vector<double> secs[3];
    std::uint64_t digests[3] = {0, 0, 0};
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
      std::mt19937_64 rng(trial_seed(cfg.seed, n, trial));
      RandomGraphConfig gc;
      gc.tokens = static_cast<NodeId>(n);
      gc.density = cfg.density;
      gc.ensure_connected = true;
      Graph g = random_graph(gc, rng);
      GraphView v(g);

      EdgeSelection out;
      secs[0].push_back(timed([&] { out = decode_mwa(v); }));
      digests[0] ^= splitmix(selection_digest(out) + trial);
      secs[1].push_back(timed([&] { out = decode_dependency_tree(v); }));
      digests[1] ^= splitmix(selection_digest(out) + trial);
      secs[2].push_back(timed([&] { out = n_run_baseline(v); }));
      digests[2] ^= splitmix(selection_digest(out) + trial);
    }
    for (int a = 0; a < 3; ++a) {
      BenchRow row;
      row.n = n;
      row.algorithm = kAlgos[a];
      row.median_seconds = median(secs[a]);
      row.digest = digests[a];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows, bool digest) {
  out << (digest ? "n,algorithm,median_seconds,digest\n" : "n,algorithm,median_seconds\n");
  char buf[64];
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.9f", r.median_seconds);
    out << r.n << "," << r.algorithm << "," << buf;
    if (digest) out << "," << r.digest;
    out << "\n";
  }
}

double log_log_slope(std::span<const BenchRow> rows, const std::string& algorithm) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (const BenchRow& r : rows) {
    if (r.algorithm != algorithm) continue;
    double x = std::log(static_cast<double>(r.n));
    double y = std::log(r.median_seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  if (k < 2) raise(Errc::precondition, "need at least two sizes for a slope");
  double den = static_cast<double>(k) * sxx - sx * sx;
  return (static_cast<double>(k) * sxy - sx * sy) / den;
}

}  // namespace arborist
