#include "gapbal/classes.hpp"

#include "gapbal/errors.hpp"
#include "gapbal/kernels/square_scan.hpp"

#include <algorithm>

namespace gapbal {

BalancingPair step_balancing(const GapContext& ctx, const BalancingPair& p) {
    const BigInt k = ctx.gap();
    return {3 * p.B + p.C + 1 - k, 8 * p.B + 3 * p.C + 4 - 4 * k};
}

BalancingPair step_balancing_inverse(const GapContext& ctx, const BalancingPair& p) {
    const BigInt k = ctx.gap();
    return {3 * p.B - p.C + 1 - k, -8 * p.B + 3 * p.C + 4 * k - 4};
}

BalancerPair step_balancer(const GapContext& ctx, const BalancerPair& p) {
    const BigInt k = ctx.gap();
    return {3 * p.r + p.r_hat + k, 8 * p.r + 3 * p.r_hat + 4 * k};
}

BalancerPair step_balancer_inverse(const GapContext& ctx, const BalancerPair& p) {
    const BigInt k = ctx.gap();
    return {3 * p.r - p.r_hat + k, -8 * p.r + 3 * p.r_hat - 4 * k};
}

namespace {

std::vector<Seed> mirror_seeds(const GapContext& ctx, const std::vector<Seed>& lower_half) {
    std::vector<Seed> seeds;
    seeds.reserve(2 * lower_half.size());
    for (const Seed& s : lower_half) {
        seeds.push_back(s);
        Seed conj = conjugate_seed(ctx, s);
        if (conj.x != s.x) seeds.push_back(std::move(conj));
    }
    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.x < b.x; });
    return seeds;
}

}  // namespace

std::vector<Seed> enumerate_seeds(const GapContext& ctx) {
    const std::int64_t k = ctx.k();
    if (k == 0) throw DomainError("k = 0 has no seeds; its single class starts at (0, 1)");

    const std::int64_t half = (k - 1) / 2;
    const auto count = static_cast<std::size_t>(half + 1);
    std::vector<Seed> lower;

    // (2k-1)^2 < 2^62 keeps the kernel's 64-bit evaluation exact.
    if (k < (std::int64_t{1} << 30)) {
        const kernels::Quadratic q{8, 8 * (1 - k), (2 * k - 1) * (2 * k - 1)};
        if (kernels::fits_int64(q, 0, count)) {
            std::vector<std::int64_t> hits;
            kernels::square_hits(q, 0, count, hits);
            lower.reserve(hits.size());
            for (std::int64_t x : hits) {
                const BigInt bx(x);
                lower.push_back({bx, isqrt(ctx.balancing_radicand(bx))});
            }
            return mirror_seeds(ctx, lower);
        }
    }
    for (BigInt x = 0; x <= half; ++x) {
        if (auto y = perfect_square_root(ctx.balancing_radicand(x))) lower.push_back({x, std::move(*y)});
    }
    return mirror_seeds(ctx, lower);
}

std::vector<Seed> enumerate_seeds_bigint(const GapContext& ctx) {
    if (ctx.k() == 0) throw DomainError("k = 0 has no seeds; its single class starts at (0, 1)");
    std::vector<Seed> seeds;
    for (BigInt x = 0; x < ctx.k(); ++x) {
        if (auto y = perfect_square_root(ctx.balancing_radicand(x)); y && *y > 0) {
            seeds.push_back({x, std::move(*y)});
        }
    }
    return seeds;
}

Seed conjugate_seed(const GapContext& ctx, const Seed& s) { return {ctx.k() - 1 - s.x, s.y}; }

bool is_ambiguous(const GapContext& ctx, const Seed& s) { return 2 * s.x == ctx.k() - 1; }

ClassCount class_count(const GapContext& ctx) {
    if (ctx.k() == 0) return {1, false};
    return {enumerate_seeds(ctx).size(), is_perfect_square(ctx.pell_constant())};
}

BalancingClass::BalancingClass(GapContext ctx, std::optional<Seed> seed, BalancingPair initial, std::size_t index)
    : ctx_(std::move(ctx)), seed_(std::move(seed)), index_(index) {
    if (seed_) seed_pair_ = seed_->as_pair();
    cache_.push_back(std::move(initial));
}

const BalancingPair& BalancingClass::term(std::int64_t i) {
    if (i < -1) throw DomainError("class terms below index -1 are not supported");
    if (i == -1) {
        if (!seed_) throw DomainError("the k = 0 class has no seed");
        return *seed_pair_;
    }
    const auto want = static_cast<std::size_t>(i);
    while (cache_.size() <= want) cache_.push_back(step_balancing(ctx_, cache_.back()));
    return cache_[want];
}

std::vector<BalancingPair> BalancingClass::terms(std::size_t n) {
    if (n > 0) term(static_cast<std::int64_t>(n) - 1);
    return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<BalancingClass> classes_for(const GapContext& ctx) {
    std::vector<BalancingClass> classes;
    if (ctx.k() == 0) {
        classes.emplace_back(ctx, std::nullopt, BalancingPair{0, 1}, 0);
        return classes;
    }
    std::vector<Seed> seeds = enumerate_seeds(ctx);
    std::vector<std::pair<BalancingPair, Seed>> starts;
    starts.reserve(seeds.size());
    for (Seed& s : seeds) {
        BalancingPair initial = step_balancing(ctx, s.as_pair());
        starts.emplace_back(std::move(initial), std::move(s));
    }
    std::sort(starts.begin(), starts.end(), [](const auto& a, const auto& b) { return a.first.B < b.first.B; });
    classes.reserve(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) {
        classes.emplace_back(ctx, std::move(starts[i].second), std::move(starts[i].first), i);
    }
    return classes;
}

std::size_t conjugate_class_index(const std::vector<BalancingClass>& classes, std::size_t i) {
    const BalancingClass& cls = classes.at(i);
    if (!cls.seed()) return i;
    const Seed conj = conjugate_seed(cls.context(), *cls.seed());
    for (std::size_t j = 0; j < classes.size(); ++j) {
        if (classes[j].seed() && *classes[j].seed() == conj) return j;
    }
    throw InvariantError("conjugate seed missing from the class list");
}

BalancerClass::BalancerClass(GapContext ctx, BalancerPair initial, std::size_t index)
    : ctx_(std::move(ctx)), index_(index) {
    cache_.push_back(std::move(initial));
}

const BalancerPair& BalancerClass::term(std::size_t i) {
    while (cache_.size() <= i) cache_.push_back(step_balancer(ctx_, cache_.back()));
    return cache_[i];
}

std::vector<BalancerPair> BalancerClass::terms(std::size_t n) {
    if (n > 0) term(n - 1);
    return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(n)};
}

BalancerClass tandem_balancer_class(const BalancingClass& cls) {
    return BalancerClass(cls.context(), balancer_of(cls.context(), cls.initial()), cls.index());
}

std::vector<BigInt> interleaved_balancing_numbers(std::vector<BalancingClass>& classes, std::size_t per_class) {
    std::vector<BigInt> out;
    out.reserve(per_class * classes.size());
    for (std::size_t i = 0; i < per_class; ++i) {
        for (BalancingClass& cls : classes) out.push_back(cls.term(static_cast<std::int64_t>(i)).B);
    }
    return out;
}

}  // namespace gapbal
