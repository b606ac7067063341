#pragma once

// Gap contexts and the (B, C) / (r, r_hat) pairs tied to T(B-k) + T(B) = T(B+r).

#include "gapbal/arithmetic.hpp"

#include <cstdint>
#include <optional>

namespace gapbal {

class GapContext {
public:
    /// Throws DomainError for k < 0.
    explicit GapContext(std::int64_t k);

    std::int64_t k() const noexcept { return k_; }
    BigInt gap() const { return BigInt(k_); }

    /// (2k-1)^2, the constant term of the balancing-pair equation.
    const BigInt& odd_square() const noexcept { return odd_square_; }

    /// N = 2k^2 - 1; equals -1 when k = 0.
    const BigInt& pell_constant() const noexcept { return pell_constant_; }

    /// 8x^2 + 8(1-k)x + (2k-1)^2
    BigInt balancing_radicand(const BigInt& x) const;

    /// 8r^2 + 8kr + 1
    BigInt balancer_radicand(const BigInt& r) const;

    friend bool operator==(const GapContext& a, const GapContext& b) { return a.k_ == b.k_; }

private:
    std::int64_t k_;
    BigInt odd_square_;
    BigInt pell_constant_;
};

/// (B, C) with C^2 = 8B^2 + 8(1-k)B + (2k-1)^2. Also used for the seed, which
/// solves the same equation below the balancing range.
struct BalancingPair {
    BigInt B;
    BigInt C;

    friend bool operator==(const BalancingPair&, const BalancingPair&) = default;
};

/// (r, r_hat) with r_hat^2 = 8r^2 + 8kr + 1.
struct BalancerPair {
    BigInt r;
    BigInt r_hat;

    friend bool operator==(const BalancerPair&, const BalancerPair&) = default;
};

enum class PellSign : int { plus = 1, minus = -1 };

/// (y, z) with y^2 - 2z^2 = sign * (2k^2 - 1).
struct PellPoint {
    BigInt y;
    BigInt z;
    PellSign sign;

    friend bool operator==(const PellPoint&, const PellPoint&) = default;
};

bool satisfies_balancing_equation(const GapContext& ctx, const BalancingPair& p);
bool satisfies_balancer_equation(const GapContext& ctx, const BalancerPair& p);
bool satisfies_pell(const GapContext& ctx, const PellPoint& p);

/// Validating constructor for a realized balancing pair (equation holds, C >= 0, B >= k).
BalancingPair make_balancing_pair(const GapContext& ctx, BigInt B, BigInt C);

/// The pair (B, C) when B is an upper k-gap balancing number, nullopt otherwise.
/// B < k is a DomainError: k is the smallest upper k-gap balancing number.
std::optional<BalancingPair> is_upper_gap_balancing(const GapContext& ctx, const BigInt& B);

/// r = (-2B + C - 1)/2, r_hat = 4B - C + 2 - 2k.
BalancerPair balancer_of(const GapContext& ctx, const BalancingPair& p);

/// m = (C - 1)/2, which equals B + r.
BigInt counterbalancer_of(const BalancingPair& p);

/// Recovers B from its balancer: B = ((2r + 2k - 1) + r_hat)/2.
BigInt balancing_from_balancer(const GapContext& ctx, const BalancerPair& p);

/// T(B-k) + T(B) == T(B+r) with r taken from balancer_of.
bool verify_triangular_identity(const GapContext& ctx, const BalancingPair& p);

/// (x, y) -> (y, 2x + 1 - k), landing on y^2 - 2z^2 = 2k^2 - 1.
PellPoint to_pell(const GapContext& ctx, const BalancingPair& p);

/// (r, r_hat) -> (r_hat, 2r + k), landing on y^2 - 2z^2 = -(2k^2 - 1).
PellPoint to_pell(const GapContext& ctx, const BalancerPair& p);

// Nomenclature. Upper: T(B-k)+T(B)=T(B+r). Lower: L = B - k with the same
// balancer. Panda-Rout: g is the median of the deleted gap for odd k, and the
// sum of the two numbers bordering it for even k.

struct UpperGapForm {
    BigInt B;
    BigInt r;
    friend bool operator==(const UpperGapForm&, const UpperGapForm&) = default;
};

struct LowerGapForm {
    BigInt L;
    BigInt r;
    friend bool operator==(const LowerGapForm&, const LowerGapForm&) = default;
};

struct PandaRoutForm {
    BigInt g;
    BigInt r;
    friend bool operator==(const PandaRoutForm&, const PandaRoutForm&) = default;
};

LowerGapForm to_lower(const GapContext& ctx, const UpperGapForm& u);
UpperGapForm from_lower(const GapContext& ctx, const LowerGapForm& l);

PandaRoutForm to_panda_rout(const GapContext& ctx, const UpperGapForm& u);

/// Throws DomainError for even k when g is even.
UpperGapForm from_panda_rout(const GapContext& ctx, const PandaRoutForm& p);

}  // namespace gapbal
