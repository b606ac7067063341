#pragma once

// Classes of upper k-gap balancing pairs: orbits of the step map
// (x, y) -> (3x + y + 1 - k, 8x + 3y + 4 - 4k), each identified by its seed.

#include "gapbal/core.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gapbal {

/// A solution (x, y) of the balancing-pair equation with 0 <= x < k and y > 0.
/// One inverse step before a class's initial pair.
struct Seed {
    BigInt x;
    BigInt y;

    BalancingPair as_pair() const { return {x, y}; }
    friend bool operator==(const Seed&, const Seed&) = default;
};

BalancingPair step_balancing(const GapContext& ctx, const BalancingPair& p);
BalancingPair step_balancing_inverse(const GapContext& ctx, const BalancingPair& p);
BalancerPair step_balancer(const GapContext& ctx, const BalancerPair& p);
BalancerPair step_balancer_inverse(const GapContext& ctx, const BalancerPair& p);

/// All seeds for k > 0, ascending in x. Scans x <= (k-1)/2 and mirrors through
/// x -> k-1-x. Throws DomainError for k = 0, which has no seed window.
std::vector<Seed> enumerate_seeds(const GapContext& ctx);

/// Same result as enumerate_seeds, scanning every x in [0, k) with exact bigint
/// arithmetic. Slow; kept as a reference path and for k beyond the kernel range.
std::vector<Seed> enumerate_seeds_bigint(const GapContext& ctx);

/// (x, y) -> (k-1-x, y). An involution on seeds.
Seed conjugate_seed(const GapContext& ctx, const Seed& s);

/// Self-conjugate seed, x = (k-1)/2.
bool is_ambiguous(const GapContext& ctx, const Seed& s);

struct ClassCount {
    std::size_t count = 0;
    /// 2k^2 - 1 is a perfect square, i.e. an ambiguous class exists.
    bool ambiguous = false;
};

ClassCount class_count(const GapContext& ctx);

// A class of upper k-gap balancing pairs with its term cache. term(i) for
// i >= 0 is a balancing pair; term(-1) is the seed (absent when k = 0).
// Reading materialized terms is safe from several threads; extending the
// cache (term/terms beyond materialized()) needs exclusive access.
class BalancingClass {
public:
    BalancingClass(GapContext ctx, std::optional<Seed> seed, BalancingPair initial, std::size_t index);

    const GapContext& context() const noexcept { return ctx_; }
    const std::optional<Seed>& seed() const noexcept { return seed_; }
    std::size_t index() const noexcept { return index_; }
    const BalancingPair& initial() const noexcept { return cache_.front(); }

    /// i >= -1. Extends the cache as needed.
    const BalancingPair& term(std::int64_t i);

    /// Terms 0 .. n-1.
    std::vector<BalancingPair> terms(std::size_t n);

    std::size_t materialized() const noexcept { return cache_.size(); }

private:
    GapContext ctx_;
    std::optional<Seed> seed_;
    std::optional<BalancingPair> seed_pair_;
    std::size_t index_;
    std::vector<BalancingPair> cache_;
};

/// One class per seed ordered by ascending B0 (index = position), or the
/// single class from (0, 1) when k = 0.
std::vector<BalancingClass> classes_for(const GapContext& ctx);

/// Index of the conjugate class within a classes_for() result.
std::size_t conjugate_class_index(const std::vector<BalancingClass>& classes, std::size_t i);

// Balancer pairs of a balancing class, generated with the balancer step map
// from balancer_of(initial pair). Same caching contract as BalancingClass.
class BalancerClass {
public:
    BalancerClass(GapContext ctx, BalancerPair initial, std::size_t index);

    const GapContext& context() const noexcept { return ctx_; }
    std::size_t index() const noexcept { return index_; }
    const BalancerPair& initial() const noexcept { return cache_.front(); }

    /// i >= 0.
    const BalancerPair& term(std::size_t i);
    std::vector<BalancerPair> terms(std::size_t n);

private:
    GapContext ctx_;
    std::size_t index_;
    std::vector<BalancerPair> cache_;
};

BalancerClass tandem_balancer_class(const BalancingClass& cls);

/// Round-robin merge of the first `per_class` B values of every class. The
/// result is ascending (max B0 < min B1 across classes).
std::vector<BigInt> interleaved_balancing_numbers(std::vector<BalancingClass>& classes, std::size_t per_class);

}  // namespace gapbal
