#include <coverkit/bench.hpp>
#include <coverkit/covering.hpp>
#include <coverkit/oracle.hpp>

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

namespace coverkit {

namespace {

template <class F>
std::int64_t best_time_ns(int repetitions, F&& run) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (int i = 0; i < std::max(1, repetitions); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    run();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min<std::int64_t>(
        best, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  }
  return best;
}

}  // namespace

BenchReport bench_window_vs_full(const System& system, const PeriodicValueTable& target,
                                 const Caps& caps, int repetitions) {
  BenchReport report;
  report.moduli = system.moduli();
  WindowOptions opts;
  opts.exhaustive = true;
  opts.caps = caps;
  ScanVerdict window, full;
  report.window_ns = best_time_ns(repetitions, [&] {
    window = verify_target_function(system, target, 0, opts);
  });
  report.full_ns = best_time_ns(repetitions, [&] {
    full = brute_cover_verdict(system, target, caps, /*exhaustive=*/true);
  });
  report.window_points = window.points_examined;
  report.full_points = full.points_examined;
  report.agree = window.holds == full.holds;
  if (report.agree && !window.holds) {
    report.agree = cover_count(system, *window.witness) != target.at(*window.witness);
  }
  if (!report.agree) {
    throw InternalError("window and full-period verdicts disagree");
  }
  return report;
}

std::string format_bench_line(const BenchReport& report) {
  std::ostringstream os;
  os << "bench|moduli=";
  for (std::size_t i = 0; i < report.moduli.size(); ++i) {
    if (i) os << ",";
    os << report.moduli[i];
  }
  os << "|S=" << report.window_points << "|N=" << report.full_points
     << "|t_window_ns=" << report.window_ns << "|t_full_ns=" << report.full_ns
     << "|agree=" << (report.agree ? "true" : "false");
  return os.str();
}

}  // namespace coverkit
