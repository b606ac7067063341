#include "gapbal/kernels/square_scan.hpp"

#include <algorithm>
#include <cmath>

namespace gapbal::kernels {
namespace {

using i128 = __int128;

constexpr i128 kInt64Max = static_cast<i128>(INT64_MAX);

// Upper bound of |a|x^2 + |b||x| + |c| over the range, saturating at 2^100.
i128 magnitude_bound(const Quadratic& q, std::int64_t first, std::size_t count) {
    const i128 lo = first;
    const i128 hi = lo + static_cast<i128>(count) - 1;
    const i128 xmax = std::max(lo < 0 ? -lo : lo, hi < 0 ? -hi : hi);
    const i128 cap = static_cast<i128>(1) << 100;
    if (xmax > (static_cast<i128>(1) << 40)) return cap;
    const i128 a = q.a < 0 ? -static_cast<i128>(q.a) : q.a;
    const i128 b = q.b < 0 ? -static_cast<i128>(q.b) : q.b;
    const i128 c = q.c < 0 ? -static_cast<i128>(q.c) : q.c;
    // xmax^2 < 2^80 and a < 2^63 could overflow 2^127; cap a first.
    if (a > (static_cast<i128>(1) << 40)) return cap;
    return a * xmax * xmax + b * xmax + c;
}

bool is_square_u64(std::uint64_t v) {
    switch (v & 15u) {
        case 0: case 1: case 4: case 9: break;
        default: return false;
    }
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (static_cast<unsigned __int128>(r) * r > v) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool fits_double_exact(const Quadratic& q, std::int64_t first, std::size_t count) noexcept {
    if (count == 0) return true;
    return magnitude_bound(q, first, count) < (static_cast<i128>(1) << 53);
}

bool fits_int64(const Quadratic& q, std::int64_t first, std::size_t count) noexcept {
    if (count == 0) return true;
    if (static_cast<i128>(first) + static_cast<i128>(count) - 1 > kInt64Max) return false;
    return magnitude_bound(q, first, count) <= kInt64Max;
}

std::size_t square_hits_scalar(const Quadratic& q, std::int64_t first, std::size_t count,
                               std::vector<std::int64_t>& hits) {
    std::size_t found = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t x = first + static_cast<std::int64_t>(i);
        const i128 v = (static_cast<i128>(q.a) * x + q.b) * x + q.c;
        if (v < 0) continue;
        if (is_square_u64(static_cast<std::uint64_t>(v))) {
            hits.push_back(x);
            ++found;
        }
    }
    return found;
}

}  // namespace gapbal::kernels
