#pragma once

#include <coverkit/system.hpp>

#include <string>
#include <vector>

namespace coverkit {

struct BenchReport {
  std::vector<Modulus> moduli;
  std::uint64_t window_points = 0;  // |S u {r/n_0}|
  std::uint64_t full_points = 0;    // lcm of all periods
  std::int64_t window_ns = 0;
  std::int64_t full_ns = 0;
  bool agree = false;
  double ratio() const {
    return window_points == 0 ? 0.0
                              : static_cast<double>(full_points) / static_cast<double>(window_points);
  }
};

// Times the window criterion against the full-period scan. Both scans visit
// every point of their range; timings are the best of `repetitions` runs.
BenchReport bench_window_vs_full(const System& system, const PeriodicValueTable& target,
                                 const Caps& caps = {}, int repetitions = 5);

// bench|moduli=<csv>|S=<int>|N=<int>|t_window_ns=<int>|t_full_ns=<int>|agree=<bool>
std::string format_bench_line(const BenchReport& report);

}  // namespace coverkit
