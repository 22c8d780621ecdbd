#pragma once

#include <coverkit/cyclotomic.hpp>
#include <coverkit/expsum.hpp>
#include <coverkit/fractions.hpp>
#include <coverkit/oracle.hpp>
#include <coverkit/system.hpp>

#include <span>
#include <vector>

namespace coverkit {

struct WindowOptions {
  // Re-run the full-period oracle whenever a window certifies a property and
  // throw InternalError on disagreement. Meant for test builds.
  bool cross_check = false;
  // Scan the entire window even after a witness is found.
  bool exhaustive = false;
  // Run the finite-field window check even when p divides a period. The
  // verdict is then not guaranteed and is never cross-checked.
  bool exploratory = false;
  Caps caps;
};

// Sum of periodic maps over a common field: if it vanishes on the
// sum-of-phi window starting at `start`, it vanishes on all of Z.
// Throws HypothesisError when the characteristic divides a period.
ScanVerdict theorem_1_1_window(std::span<const PeriodicValueTable> psis, std::int64_t start,
                               const WindowOptions& opts = {});

// Decides w_A == target on Z from |S u {r/n_0}| consecutive integers.
// Over F_p (target.field()) the comparison is mod p.
ScanVerdict verify_target_function(const System& system, const PeriodicValueTable& target,
                                   std::int64_t start, const WindowOptions& opts = {});

bool is_exact_m_cover(const System& system, std::int64_t m, const WindowOptions& opts = {});

// Some x in [0, |S|) with w_A(x) != m, for m > k - f([n_1..n_k]).
std::int64_t corollary_1_2_witness(const System& system, std::int64_t m);

// Whether the sets X_s cover every integer at least m times, decided on a
// window of W consecutive integers.
ScanVerdict theorem_1_2_window_cover(std::span<const ExpSequence> seqs, std::uint64_t m,
                                     std::int64_t start, const WindowOptions& opts = {});

struct MinWindowReport {
  std::uint64_t window_size;
  Rational window_min;
  Rational global_min;
};

MinWindowReport corollary_1_3_min_window(const System& system,
                                         std::span<const std::int64_t> multipliers,
                                         std::uint64_t l, std::int64_t start,
                                         const Caps& caps = {});

struct AlphaCoefficient {
  Fraction alpha;
  // sum over s with alpha n_s in Z of (lambda_s / n_s) exp(2 pi i alpha a_s),
  // at level den(alpha).
  CyclotomicElement coeff;
};

std::vector<AlphaCoefficient> fourier_coefficients(const System& system);

// Least period of the weighted covering function, from its nonzero
// coefficients.
Integer least_period_thm13(const System& system);

// Mean of w over one period equals sum_s lambda_s / n_s.
bool weighted_average_check(const System& system, const Caps& caps = {});

// All coefficients of a system whose covering function vanishes identically.
// Throws HypothesisError when w is not identically zero.
std::vector<AlphaCoefficient> zero_system_coefficients(const System& system,
                                                       const Caps& caps = {});

// For an unweighted system covering all integers equally: subset sums of
// 1/n_s contain every r/n_s. Throws HypothesisError otherwise.
bool su6_superset_check(const System& system, const Caps& caps = {});

}  // namespace coverkit
