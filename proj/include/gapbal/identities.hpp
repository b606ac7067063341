#pragma once

// Executable checks of the per-class identities: second-order recurrences,
// Cassini-like formulas, and the limits of ratios and mixed differences.

#include "gapbal/classes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gapbal {

struct LimitTrace {
    std::string limit;                // the value approached, e.g. "3+sqrt(8)"
    std::size_t first_index = 0;      // index of errors.front()
    std::vector<std::string> errors;  // |value_i - limit|, scientific notation
    bool strictly_decreasing = false;
    /// Index of the first term with B_i > 10^8 inside the window, if any.
    std::optional<std::size_t> threshold_index;
    /// Every error at an index with B_i > 10^8 is below 10^-8.
    bool below_threshold = false;
};

struct IdentityReport {
    std::string name;
    std::size_t class_index = 0;
    std::size_t first_index = 0;
    std::size_t last_index = 0;
    bool passed = false;
    std::optional<std::size_t> failing_index;
    std::string detail;
    std::optional<LimitTrace> limit;
};

/// B, C, r, r_hat and m recurrences for 1 <= i <= n (needs term n+1).
std::vector<IdentityReport> check_recurrences(BalancingClass& cls, std::size_t n);

/// The five Cassini-like residuals for 1 <= i <= n.
std::vector<IdentityReport> check_cassini(BalancingClass& cls, std::size_t n);

inline constexpr unsigned kDefaultLimitDigits = 60;

/// Successive-term ratios of B, C, r, r_hat, m against 3 + sqrt(8). The error
/// window starts at the first index with B_i > 4k + 2 and ends at n; `passed`
/// requires a strictly decreasing error sequence of at least five values.
/// The 10^-8 threshold verdict is reported in the trace only.
std::vector<IdentityReport> check_ratio_limits(BalancingClass& cls, std::size_t n,
                                               unsigned digits = kDefaultLimitDigits);

/// C - sqrt(8)B -> sqrt(2)(1-k), r_hat - sqrt(8)r -> sqrt(2)k, C/B and
/// r_hat/r -> sqrt(8), plus the exact integer identity
/// (2C)^2 - 8(2B - (k-1))^2 = 4(2k^2 - 1) for every term.
std::vector<IdentityReport> check_mixed_limits(BalancingClass& cls, std::size_t n,
                                               unsigned digits = kDefaultLimitDigits);

/// Pair-level identities for terms 0 .. n of a class: both defining equations,
/// the triangular identity, the balancer conversions, the tandem step and the
/// forward/inverse step round trips.
std::vector<IdentityReport> check_pair_identities(BalancingClass& cls, std::size_t n);

}  // namespace gapbal
