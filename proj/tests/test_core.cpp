#include "gapbal/classes.hpp"
#include "gapbal/core.hpp"
#include "gapbal/errors.hpp"

#include "doctest.h"

using namespace gapbal;

namespace {

BalancingPair pair(std::int64_t b, std::int64_t c) { return {BigInt(b), BigInt(c)}; }

// Sum of first..last, zero when the range is empty.
BigInt range_sum(const BigInt& first, const BigInt& last) {
    if (last < first) return 0;
    return (first + last) * (last - first + 1) / 2;
}

}  // namespace

TEST_CASE("gap context") {
    const GapContext ctx(9);
    CHECK(ctx.odd_square() == 289);
    CHECK(ctx.pell_constant() == 161);
    CHECK(GapContext(0).pell_constant() == -1);
    CHECK_THROWS_AS(GapContext(-1), DomainError);
    CHECK(ctx.balancing_radicand(20) == 47 * 47);
    CHECK(ctx.balancer_radicand(3) == 17 * 17);
}

TEST_CASE("membership") {
    const GapContext ctx(9);
    CHECK(is_upper_gap_balancing(ctx, 20) == pair(20, 47));
    CHECK(is_upper_gap_balancing(ctx, 9) == pair(9, 19));
    CHECK_FALSE(is_upper_gap_balancing(ctx, 10).has_value());
    CHECK_THROWS_AS(is_upper_gap_balancing(ctx, 8), DomainError);

    std::vector<std::int64_t> found;
    for (std::int64_t b = 9; b < 38; ++b) {
        if (is_upper_gap_balancing(ctx, b)) found.push_back(b);
    }
    CHECK(found == std::vector<std::int64_t>{9, 14, 20, 33});

    CHECK(is_upper_gap_balancing(GapContext(0), 0) == pair(0, 1));
    CHECK_THROWS_AS(make_balancing_pair(ctx, 20, 46), DomainError);
    CHECK_THROWS_AS(make_balancing_pair(ctx, 20, -47), DomainError);
    CHECK(make_balancing_pair(ctx, 33, 83) == pair(33, 83));
}

TEST_CASE("balancers and counterbalancers") {
    const GapContext ctx(9);
    CHECK(balancer_of(ctx, pair(20, 47)) == BalancerPair{3, 17});
    CHECK(balancer_of(ctx, pair(33, 83)) == BalancerPair{8, 33});
    for (std::int64_t k = 0; k < 40; ++k) {
        const GapContext c(k);
        const BalancingPair p = pair(k, 2 * k + 1);
        CHECK(balancer_of(c, p) == BalancerPair{0, 1});
        CHECK(counterbalancer_of(p) == k);
        CHECK(verify_triangular_identity(c, p));
    }
    CHECK(counterbalancer_of(pair(20, 47)) == 23);
    CHECK(counterbalancer_of(pair(9, 19)) == 9);
    CHECK_THROWS_AS(counterbalancer_of(pair(20, 46)), InvariantError);
    CHECK(verify_triangular_identity(ctx, pair(20, 47)));
    CHECK(verify_triangular_identity(ctx, pair(33, 83)));
    CHECK(triangular(24) + triangular(33) == triangular(41));
}

TEST_CASE("conversions hold on every class term for k <= 60") {
    for (std::int64_t k = 0; k <= 60; ++k) {
        const GapContext ctx(k);
        for (auto& cls : classes_for(ctx)) {
            for (const auto& p : cls.terms(8)) {
                REQUIRE(satisfies_balancing_equation(ctx, p));
                const BalancerPair b = balancer_of(ctx, p);
                REQUIRE(satisfies_balancer_equation(ctx, b));
                REQUIRE(b.r_hat == 2 * p.B - 2 * b.r + 1 - 2 * k);
                REQUIRE(counterbalancer_of(p) == p.B + b.r);
                REQUIRE(balancing_from_balancer(ctx, b) == p.B);
                REQUIRE(verify_triangular_identity(ctx, p));
            }
        }
    }
}

TEST_CASE("pell substitutions") {
    const GapContext ctx(9);
    const PellPoint seed = to_pell(ctx, pair(0, 17));
    CHECK(seed == PellPoint{17, -8, PellSign::plus});
    CHECK(satisfies_pell(ctx, seed));

    const PellPoint first = to_pell(ctx, pair(9, 19));
    CHECK(first.z == 10);
    CHECK(first.y * first.y - 2 * first.z * first.z == 161);

    const PellPoint bal = to_pell(ctx, BalancerPair{3, 17});
    CHECK(bal == PellPoint{17, 15, PellSign::minus});
    CHECK(satisfies_pell(ctx, bal));

    const GapContext zero(0);
    CHECK(to_pell(zero, pair(0, 1)) == PellPoint{1, 1, PellSign::plus});
    CHECK(satisfies_pell(zero, to_pell(zero, pair(0, 1))));
}

TEST_CASE("pell substitutions against a brute-force solution scan, k <= 60") {
    // Every (x, y) with 0 <= x < 2000 solving the balancing equation, found by
    // testing y directly, must land on the plus-sign Pell curve.
    for (std::int64_t k = 0; k <= 60; ++k) {
        const GapContext ctx(k);
        const std::int64_t n = 2 * k * k - 1;
        for (std::int64_t x = 0; x < 2000; ++x) {
            const std::int64_t rad = 8 * x * x + 8 * (1 - k) * x + (2 * k - 1) * (2 * k - 1);
            std::int64_t y = 0;
            while (y * y < rad) ++y;
            if (y * y != rad) continue;
            const PellPoint p = to_pell(ctx, pair(x, y));
            REQUIRE(p.y * p.y - 2 * p.z * p.z == n);
            REQUIRE(satisfies_pell(ctx, p));
        }
        for (std::int64_t r = 0; r < 2000; ++r) {
            const std::int64_t rad = 8 * r * r + 8 * k * r + 1;
            const BigInt root = isqrt(rad);
            if (root * root != rad) continue;
            const PellPoint p = to_pell(ctx, BalancerPair{r, root});
            REQUIRE(p.y * p.y - 2 * p.z * p.z == -n);
        }
    }
}

TEST_CASE("nomenclature") {
    const GapContext nine(9);
    CHECK(to_lower(nine, {20, 3}) == LowerGapForm{11, 3});
    CHECK(from_lower(nine, {11, 3}) == UpperGapForm{20, 3});
    CHECK(to_panda_rout(nine, {20, 3}) == PandaRoutForm{16, 7});
    CHECK(to_panda_rout(GapContext(2), {2, 0}) == PandaRoutForm{3, 1});
    CHECK_THROWS_AS(from_panda_rout(GapContext(2), {4, 1}), DomainError);
}

TEST_CASE("nomenclature against the defining summations") {
    for (std::int64_t k = 1; k <= 40; ++k) {
        const GapContext ctx(k);
        for (auto& cls : classes_for(ctx)) {
            for (const auto& p : cls.terms(5)) {
                const BigInt r = balancer_of(ctx, p).r;
                const UpperGapForm up{p.B, r};
                const PandaRoutForm pr = to_panda_rout(ctx, up);
                if (k % 2 == 1) {
                    // 1 + ... + (g - (k+1)/2) = (g + (k+1)/2) + ... + (g + r_k)
                    const BigInt left = range_sum(1, pr.g - (k + 1) / 2);
                    const BigInt right = range_sum(pr.g + (k + 1) / 2, pr.g + pr.r);
                    REQUIRE(left == right);
                } else {
                    // g = 2n + 1; 1 + ... + (n - k/2) = (n + k/2 + 1) + ... + (n + r_k)
                    REQUIRE(pr.g % 2 == 1);
                    const BigInt n = (pr.g - 1) / 2;
                    REQUIRE(range_sum(1, n - k / 2) == range_sum(n + k / 2 + 1, n + pr.r));
                }
                REQUIRE(from_panda_rout(ctx, pr) == up);
                REQUIRE(from_lower(ctx, to_lower(ctx, up)) == up);
                const LowerGapForm low = to_lower(ctx, up);
                REQUIRE(triangular(low.L) + triangular(low.L + k) == triangular(low.L + k + low.r));
            }
        }
    }
}
