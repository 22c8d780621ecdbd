#pragma once

#include <coverkit/expsum.hpp>
#include <coverkit/system.hpp>

#include <optional>
#include <span>

namespace coverkit {

// Outcome of a window or full-period scan. `holds` is the certified property
// (zero sum, matching target, m-fold coverage); `witness` is the first point
// where it fails.
struct ScanVerdict {
  bool holds = true;
  std::optional<std::int64_t> witness;
  std::uint64_t window_length = 0;
  std::uint64_t points_examined = 0;
};

inline namespace oracle {

// Compares w_A with `target` on every x in [0, lcm(moduli, target period)).
// With `exhaustive`, keeps scanning after the first mismatch.
ScanVerdict brute_cover_verdict(const System& system, const PeriodicValueTable& target,
                                const Caps& caps = {}, bool exhaustive = false);

// Least n dividing the table period with table(x) = table(x + n) for all x.
std::uint64_t brute_least_period(const PeriodicValueTable& table);

// Whether psi_1 + ... + psi_k vanishes over one full common period.
ScanVerdict brute_zero_sum(std::span<const PeriodicValueTable> psis, const Caps& caps = {});

// Whether every integer lies in at least m of the X_s, over one full period.
ScanVerdict brute_expsum_cover(std::span<const ExpSequence> seqs, std::uint64_t m,
                               const Caps& caps = {});

}  // namespace oracle
}  // namespace coverkit
