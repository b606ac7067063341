#include "gapbal/errors.hpp"
#include "gapbal/kernels/square_scan.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace gapbal::kernels;

namespace {

std::vector<std::int64_t> naive(const Quadratic& q, std::int64_t first, std::size_t count) {
    std::vector<std::int64_t> hits;
    for (std::size_t i = 0; i < count; ++i) {
        const auto x = static_cast<__int128>(first) + static_cast<__int128>(i);
        const __int128 v = q.a * x * x + q.b * x + q.c;
        if (v < 0) continue;
        __int128 r = static_cast<__int128>(std::sqrt(static_cast<long double>(v)));
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        if (r * r == v) hits.push_back(static_cast<std::int64_t>(x));
    }
    return hits;
}

}  // namespace

TEST_CASE("scalar kernel matches a naive scan") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> coef(-50, 50);
    for (int t = 0; t < 300; ++t) {
        const Quadratic q{coef(rng), coef(rng), coef(rng) * coef(rng)};
        const std::int64_t first = coef(rng) * 10;
        std::vector<std::int64_t> hits;
        square_hits_scalar(q, first, 1000, hits);
        REQUIRE(hits == naive(q, first, 1000));
    }
}

TEST_CASE("balancing radicand scan finds the k = 9 seeds") {
    const std::int64_t k = 9;
    const Quadratic q{8, 8 * (1 - k), (2 * k - 1) * (2 * k - 1)};
    std::vector<std::int64_t> hits;
    square_hits(q, 0, k, hits);
    CHECK(hits == std::vector<std::int64_t>{0, 3, 5, 8});
}

#if defined(GAPBAL_HAVE_AVX2)
TEST_CASE("avx2 kernel is equivalent to the scalar kernel") {
    if (!cpu_has_avx2()) return;
    std::mt19937_64 rng(5);
    for (std::int64_t k = 0; k < 400; ++k) {
        const Quadratic q{8, 8 * (1 - k), (2 * k - 1) * (2 * k - 1)};
        std::vector<std::int64_t> a, b;
        // Odd counts exercise the tail handling.
        const std::size_t count = 1000 + static_cast<std::size_t>(k % 7);
        REQUIRE(fits_double_exact(q, k, count));
        square_hits_scalar(q, k, count, a);
        square_hits_avx2(q, k, count, b);
        REQUIRE(a == b);
    }
    std::uniform_int_distribution<std::int64_t> coef(-1000, 1000);
    for (int t = 0; t < 300; ++t) {
        const Quadratic q{coef(rng), coef(rng), coef(rng) * 997};
        const std::int64_t first = coef(rng) * 50;
        const std::size_t count = 1 + static_cast<std::size_t>(t * 13);
        if (!fits_double_exact(q, first, count)) continue;
        std::vector<std::int64_t> a, b;
        square_hits_scalar(q, first, count, a);
        square_hits_avx2(q, first, count, b);
        REQUIRE(a == b);
    }
    // Squares near 2^52, where the double sqrt rounding matters most.
    const Quadratic big{1, 0, 0};
    std::vector<std::int64_t> a, b;
    const std::int64_t first = (std::int64_t{1} << 26) - 4000;
    REQUIRE(fits_double_exact(big, first, 8000));
    square_hits_scalar(big, first, 8000, a);
    square_hits_avx2(big, first, 8000, b);
    CHECK(a.size() == 8000);
    CHECK(a == b);
    const Quadratic off{1, 0, -1};
    a.clear();
    b.clear();
    square_hits_scalar(off, first, 8000, a);
    square_hits_avx2(off, first, 8000, b);
    CHECK(a.empty());
    CHECK(a == b);
}
#endif

TEST_CASE("dispatch honours the pinned isa and falls back outside the exact range") {
    const Isa before = active_isa();
    set_active_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    CHECK(isa_name(Isa::scalar) == "scalar");
    set_active_isa(Isa::avx2);
    if (!cpu_has_avx2()) CHECK(active_isa() == Isa::scalar);

    // Beyond 2^53 the dispatcher must still answer exactly.
    const Quadratic q{1, 0, 0};
    const std::int64_t first = std::int64_t{1} << 28;
    CHECK_FALSE(fits_double_exact(q, first, 64));
    std::vector<std::int64_t> hits;
    square_hits(q, first, 64, hits);
    CHECK(hits.size() == 64);
    set_active_isa(before);

    CHECK_FALSE(fits_int64(Quadratic{1, 0, 0}, std::int64_t{1} << 40, 10));
    std::vector<std::int64_t> none;
    CHECK_THROWS_AS(square_hits(Quadratic{1, 0, 0}, std::int64_t{1} << 40, 10, none), gapbal::DomainError);
}
