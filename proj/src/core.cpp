#include "gapbal/core.hpp"

#include "gapbal/errors.hpp"

namespace gapbal {
namespace {

BigInt exact_half(const BigInt& v, const char* what) {
    if (boost::multiprecision::bit_test(v, 0)) {
        throw InvariantError(std::string(what) + ": odd value " + v.str() + " cannot be halved");
    }
    return v / 2;
}

}  // namespace

GapContext::GapContext(std::int64_t k) : k_(k) {
    if (k < 0) throw DomainError("gap size k must be nonnegative, got " + std::to_string(k));
    const BigInt kk(k);
    odd_square_ = (2 * kk - 1) * (2 * kk - 1);
    pell_constant_ = 2 * kk * kk - 1;
}

BigInt GapContext::balancing_radicand(const BigInt& x) const {
    return 8 * x * x + 8 * (1 - BigInt(k_)) * x + odd_square_;
}

BigInt GapContext::balancer_radicand(const BigInt& r) const {
    return 8 * r * r + 8 * BigInt(k_) * r + 1;
}

bool satisfies_balancing_equation(const GapContext& ctx, const BalancingPair& p) {
    return p.C * p.C == ctx.balancing_radicand(p.B);
}

bool satisfies_balancer_equation(const GapContext& ctx, const BalancerPair& p) {
    return p.r_hat * p.r_hat == ctx.balancer_radicand(p.r);
}

bool satisfies_pell(const GapContext& ctx, const PellPoint& p) {
    const BigInt lhs = p.y * p.y - 2 * p.z * p.z;
    return p.sign == PellSign::plus ? lhs == ctx.pell_constant() : lhs == -ctx.pell_constant();
}

BalancingPair make_balancing_pair(const GapContext& ctx, BigInt B, BigInt C) {
    BalancingPair p{std::move(B), std::move(C)};
    if (p.B < ctx.k()) throw DomainError("B = " + p.B.str() + " is below k = " + std::to_string(ctx.k()));
    if (p.C < 0 || !satisfies_balancing_equation(ctx, p)) {
        throw DomainError("(" + p.B.str() + ", " + p.C.str() + ") is not an upper " + std::to_string(ctx.k()) +
                          "-gap balancing pair");
    }
    return p;
}

std::optional<BalancingPair> is_upper_gap_balancing(const GapContext& ctx, const BigInt& B) {
    if (B < ctx.k()) {
        throw DomainError("B = " + B.str() + " is below the smallest upper " + std::to_string(ctx.k()) +
                          "-gap balancing number");
    }
    auto root = perfect_square_root(ctx.balancing_radicand(B));
    if (!root) return std::nullopt;
    return BalancingPair{B, std::move(*root)};
}

BalancerPair balancer_of(const GapContext& ctx, const BalancingPair& p) {
    BigInt r = exact_half(-2 * p.B + p.C - 1, "balancer_of");
    BigInt r_hat = 4 * p.B - p.C + 2 - 2 * ctx.gap();
    return {std::move(r), std::move(r_hat)};
}

BigInt counterbalancer_of(const BalancingPair& p) { return exact_half(p.C - 1, "counterbalancer_of"); }

BigInt balancing_from_balancer(const GapContext& ctx, const BalancerPair& p) {
    return exact_half(2 * p.r + 2 * ctx.gap() - 1 + p.r_hat, "balancing_from_balancer");
}

bool verify_triangular_identity(const GapContext& ctx, const BalancingPair& p) {
    if (p.B < ctx.k()) return false;
    const BalancerPair bal = balancer_of(ctx, p);
    if (bal.r < 0) return false;
    return triangular(p.B - ctx.k()) + triangular(p.B) == triangular(p.B + bal.r);
}

PellPoint to_pell(const GapContext& ctx, const BalancingPair& p) {
    return {p.C, 2 * p.B + 1 - ctx.gap(), PellSign::plus};
}

PellPoint to_pell(const GapContext& ctx, const BalancerPair& p) {
    return {p.r_hat, 2 * p.r + ctx.gap(), PellSign::minus};
}

LowerGapForm to_lower(const GapContext& ctx, const UpperGapForm& u) { return {u.B - ctx.k(), u.r}; }

UpperGapForm from_lower(const GapContext& ctx, const LowerGapForm& l) { return {l.L + ctx.k(), l.r}; }

PandaRoutForm to_panda_rout(const GapContext& ctx, const UpperGapForm& u) {
    const std::int64_t k = ctx.k();
    if (k % 2 == 1) {
        // The deleted gap is B-k+1 .. B; its median sits (k-1)/2 below B.
        return {u.B - (k - 1) / 2, u.r + (k - 1) / 2};
    }
    return {2 * u.B - k + 1, u.r + k / 2};
}

UpperGapForm from_panda_rout(const GapContext& ctx, const PandaRoutForm& p) {
    const std::int64_t k = ctx.k();
    if (k % 2 == 1) return {p.g + (k - 1) / 2, p.r - (k - 1) / 2};
    if (!boost::multiprecision::bit_test(p.g, 0)) {
        throw DomainError("even k requires an odd Panda-Rout number, got " + p.g.str());
    }
    return {(p.g - 1) / 2 + k / 2, p.r - k / 2};
}

}  // namespace gapbal
