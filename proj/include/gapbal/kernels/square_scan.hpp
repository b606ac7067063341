#pragma once

// Perfect-square scan of an integer quadratic over a contiguous range.
//
// Both the seed search (x in [0, k)) and the brute-force membership scan reduce
// to: for which x in [first, first + count) is a*x^2 + b*x + c a perfect square?
// The scalar kernel is the reference; the AVX2 kernel evaluates four lanes in
// double precision, which is exact while every intermediate magnitude stays
// below 2^53 (checked by fits_double_exact before dispatching to it).

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace gapbal::kernels {

struct Quadratic {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when |a|x^2 + |b||x| + |c| < 2^53 for every x in the range.
bool fits_double_exact(const Quadratic& q, std::int64_t first, std::size_t count) noexcept;

/// True when the scalar kernel's 128-bit evaluation is exact over the range.
bool fits_int64(const Quadratic& q, std::int64_t first, std::size_t count) noexcept;

// Each kernel appends the x with q(x) a perfect square (q(x) >= 0) to `hits`
// in ascending order and returns the number appended.

/// Requires fits_int64.
std::size_t square_hits_scalar(const Quadratic& q, std::int64_t first, std::size_t count,
                               std::vector<std::int64_t>& hits);

#if defined(GAPBAL_HAVE_AVX2)
/// Requires fits_double_exact and a CPU with AVX2.
std::size_t square_hits_avx2(const Quadratic& q, std::int64_t first, std::size_t count,
                             std::vector<std::int64_t>& hits);
#endif

bool cpu_has_avx2() noexcept;

/// ISA used by square_hits. Defaults to the best one available; the
/// GAPBAL_ISA environment variable ("scalar"/"avx2") overrides at first use.
Isa active_isa() noexcept;

/// Pins the ISA (tests, benchmarks). Requesting avx2 on a CPU without it keeps scalar.
void set_active_isa(Isa isa) noexcept;

/// Dispatches to the active kernel, falling back to scalar outside the
/// double-exact range. Requires fits_int64.
std::size_t square_hits(const Quadratic& q, std::int64_t first, std::size_t count,
                        std::vector<std::int64_t>& hits);

}  // namespace gapbal::kernels
