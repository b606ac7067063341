#include "gapbal/identities.hpp"

#include "gapbal/errors.hpp"
#include "highprec.hpp"

#include <functional>

namespace gapbal {
namespace {

struct Columns {
    std::vector<BigInt> B, C, r, r_hat, m;
};

Columns collect(BalancingClass& cls, std::size_t count) {
    Columns cols;
    const GapContext& ctx = cls.context();
    for (const BalancingPair& p : cls.terms(count)) {
        const BalancerPair bal = balancer_of(ctx, p);
        cols.B.push_back(p.B);
        cols.C.push_back(p.C);
        cols.r.push_back(bal.r);
        cols.r_hat.push_back(bal.r_hat);
        cols.m.push_back(counterbalancer_of(p));
    }
    return cols;
}

using IndexCheck = std::function<bool(std::size_t)>;

IdentityReport run_exact(const std::string& name, std::size_t class_index, std::size_t first, std::size_t last,
                         const IndexCheck& holds) {
    IdentityReport rep;
    rep.name = name;
    rep.class_index = class_index;
    rep.first_index = first;
    rep.last_index = last;
    rep.passed = true;
    for (std::size_t i = first; i <= last; ++i) {
        if (!holds(i)) {
            rep.passed = false;
            rep.failing_index = i;
            rep.detail = "residual mismatch at index " + std::to_string(i);
            break;
        }
    }
    return rep;
}

}  // namespace

std::vector<IdentityReport> check_recurrences(BalancingClass& cls, std::size_t n) {
    if (n < 1) throw DomainError("recurrence check needs n >= 1");
    const Columns t = collect(cls, n + 2);
    const BigInt k = cls.context().gap();
    const std::size_t ci = cls.index();

    auto second_order = [&](const std::vector<BigInt>& s, const BigInt& constant) {
        return [&s, constant](std::size_t i) { return s[i + 1] == 6 * s[i] - s[i - 1] + constant; };
    };
    return {
        run_exact("recurrence B: B[i+1] = 6B[i] - B[i-1] + 2 - 2k", ci, 1, n, second_order(t.B, 2 - 2 * k)),
        run_exact("recurrence C: C[i+1] = 6C[i] - C[i-1]", ci, 1, n, second_order(t.C, 0)),
        run_exact("recurrence r: r[i+1] = 6r[i] - r[i-1] + 2k", ci, 1, n, second_order(t.r, 2 * k)),
        run_exact("recurrence r_hat: r_hat[i+1] = 6r_hat[i] - r_hat[i-1]", ci, 1, n, second_order(t.r_hat, 0)),
        run_exact("recurrence m: m[i+1] = 6m[i] - m[i-1] + 2", ci, 1, n, second_order(t.m, 2)),
    };
}

std::vector<IdentityReport> check_cassini(BalancingClass& cls, std::size_t n) {
    if (n < 1) throw DomainError("Cassini check needs n >= 1");
    const Columns t = collect(cls, n + 2);
    const GapContext& ctx = cls.context();
    const BigInt k = ctx.gap();
    const BigInt& N = ctx.pell_constant();
    const std::size_t ci = cls.index();

    auto cassini = [](const std::vector<BigInt>& s, BigInt shift, BigInt constant) {
        return [&s, shift = std::move(shift), constant = std::move(constant)](std::size_t i) {
            const BigInt centre = s[i] + shift;
            return centre * centre - s[i - 1] * s[i + 1] == constant;
        };
    };
    return {
        run_exact("cassini B: (B[i]+k-1)^2 - B[i-1]B[i+1] = (2k-1)^2", ci, 1, n,
                  cassini(t.B, k - 1, ctx.odd_square())),
        run_exact("cassini C: C[i]^2 - C[i-1]C[i+1] = -8(2k^2-1)", ci, 1, n, cassini(t.C, 0, -8 * N)),
        run_exact("cassini r: (r[i]-k)^2 - r[i-1]r[i+1] = 1", ci, 1, n, cassini(t.r, -k, 1)),
        run_exact("cassini r_hat: r_hat[i]^2 - r_hat[i-1]r_hat[i+1] = 8(2k^2-1)", ci, 1, n,
                  cassini(t.r_hat, 0, 8 * N)),
        run_exact("cassini m: (m[i]-1)^2 - m[i-1]m[i+1] = -4(k^2-1)", ci, 1, n,
                  cassini(t.m, -1, -4 * (k * k - 1))),
    };
}

namespace {

using detail::Real;

constexpr int kErrorDigits = 20;

std::size_t limit_window_start(const std::vector<BigInt>& B, std::int64_t k) {
    const BigInt bound = 4 * BigInt(k) + 2;
    for (std::size_t i = 0; i < B.size(); ++i) {
        if (B[i] > bound) return i;
    }
    return B.size();
}

// errors[j] belongs to index first + j.
IdentityReport limit_report(const std::string& name, const std::string& limit, std::size_t class_index,
                            std::size_t first, const std::vector<Real>& errors, const std::vector<BigInt>& B) {
    IdentityReport rep;
    rep.name = name;
    rep.class_index = class_index;
    rep.first_index = first;
    rep.last_index = first + errors.size() - 1;

    LimitTrace trace;
    trace.limit = limit;
    trace.first_index = first;
    trace.strictly_decreasing = true;
    trace.below_threshold = true;
    const Real threshold = Real(1, errors.front().bits()) / Real(100000000, errors.front().bits());
    const BigInt big_b = 100000000;
    for (std::size_t j = 0; j < errors.size(); ++j) {
        trace.errors.push_back(errors[j].str(kErrorDigits));
        if (j > 0 && !(errors[j] < errors[j - 1]) && trace.strictly_decreasing) {
            trace.strictly_decreasing = false;
            rep.failing_index = first + j;
        }
        if (B[first + j] > big_b) {
            if (!trace.threshold_index) trace.threshold_index = first + j;
            if (!(errors[j] < threshold)) trace.below_threshold = false;
        }
    }
    if (!trace.threshold_index) trace.below_threshold = false;
    rep.passed = trace.strictly_decreasing;
    if (!rep.passed) rep.detail = "error sequence not strictly decreasing at index " + std::to_string(*rep.failing_index);
    rep.limit = std::move(trace);
    return rep;
}

void require_window(std::size_t first, std::size_t last) {
    if (first > last || last - first + 1 < 5) {
        throw DomainError("limit window from index " + std::to_string(first) + " to " + std::to_string(last) +
                          " holds fewer than five terms; raise n");
    }
}

}  // namespace

std::vector<IdentityReport> check_ratio_limits(BalancingClass& cls, std::size_t n, unsigned digits) {
    if (digits < 50) throw DomainError("limit checks need at least 50 digits of precision");
    const Columns t = collect(cls, n + 2);
    const std::size_t first = limit_window_start(t.B, cls.context().k());
    require_window(first, n);

    const auto bits = detail::bits_for_digits(digits);
    const Real target = Real(3, bits) + sqrt(Real(8, bits));
    auto ratio_errors = [&](const std::vector<BigInt>& s) {
        std::vector<Real> errs;
        for (std::size_t i = first; i <= n; ++i) errs.push_back(abs(Real(s[i + 1], bits) / Real(s[i], bits) - target));
        return errs;
    };
    const std::size_t ci = cls.index();
    const std::string lim = "3+sqrt(8)";
    return {
        limit_report("ratio B[i+1]/B[i]", lim, ci, first, ratio_errors(t.B), t.B),
        limit_report("ratio C[i+1]/C[i]", lim, ci, first, ratio_errors(t.C), t.B),
        limit_report("ratio r[i+1]/r[i]", lim, ci, first, ratio_errors(t.r), t.B),
        limit_report("ratio r_hat[i+1]/r_hat[i]", lim, ci, first, ratio_errors(t.r_hat), t.B),
        limit_report("ratio m[i+1]/m[i]", lim, ci, first, ratio_errors(t.m), t.B),
    };
}

std::vector<IdentityReport> check_mixed_limits(BalancingClass& cls, std::size_t n, unsigned digits) {
    if (digits < 50) throw DomainError("limit checks need at least 50 digits of precision");
    const GapContext& ctx = cls.context();
    const Columns t = collect(cls, n + 1);
    const std::size_t first = limit_window_start(t.B, ctx.k());
    require_window(first, n);

    const auto bits = detail::bits_for_digits(digits);
    const Real sqrt8 = sqrt(Real(8, bits));
    const Real sqrt2 = sqrt(Real(2, bits));
    const Real k(ctx.gap(), bits);
    const Real lucas_limit = sqrt2 * (Real(1, bits) - k);
    const Real balancer_limit = sqrt2 * k;

    std::vector<Real> diff_c, diff_r, quot_c, quot_r;
    for (std::size_t i = first; i <= n; ++i) {
        const Real B(t.B[i], bits), C(t.C[i], bits), r(t.r[i], bits), rh(t.r_hat[i], bits);
        diff_c.push_back(abs(C - sqrt8 * B - lucas_limit));
        diff_r.push_back(abs(rh - sqrt8 * r - balancer_limit));
        quot_c.push_back(abs(C / B - sqrt8));
        quot_r.push_back(abs(rh / r - sqrt8));
    }

    const std::size_t ci = cls.index();
    std::vector<IdentityReport> out{
        limit_report("difference C[i] - sqrt(8)B[i]", "sqrt(2)(1-k)", ci, first, diff_c, t.B),
        limit_report("difference r_hat[i] - sqrt(8)r[i]", "sqrt(2)k", ci, first, diff_r, t.B),
        limit_report("quotient C[i]/B[i]", "sqrt(8)", ci, first, quot_c, t.B),
        limit_report("quotient r_hat[i]/r[i]", "sqrt(8)", ci, first, quot_r, t.B),
    };
    const BigInt km1 = ctx.gap() - 1;
    const BigInt rhs = 4 * ctx.pell_constant();
    out.push_back(run_exact("pell form: (2C)^2 - 8(2B - (k-1))^2 = 4(2k^2-1)", ci, 0, n, [&](std::size_t i) {
        const BigInt shifted = 2 * t.B[i] - km1;
        return 4 * t.C[i] * t.C[i] - 8 * shifted * shifted == rhs;
    }));
    return out;
}

std::vector<IdentityReport> check_pair_identities(BalancingClass& cls, std::size_t n) {
    const GapContext& ctx = cls.context();
    const std::vector<BalancingPair> pairs = cls.terms(n + 1);
    std::vector<BalancerPair> bals;
    bals.reserve(pairs.size());
    for (const auto& p : pairs) bals.push_back(balancer_of(ctx, p));
    const BigInt k = ctx.gap();
    const std::size_t ci = cls.index();

    return {
        run_exact("balancing equation C^2 = 8B^2 + 8(1-k)B + (2k-1)^2", ci, 0, n,
                  [&](std::size_t i) { return pairs[i].C >= 0 && satisfies_balancing_equation(ctx, pairs[i]); }),
        run_exact("balancer equation r_hat^2 = 8r^2 + 8kr + 1", ci, 0, n,
                  [&](std::size_t i) { return bals[i].r >= 0 && satisfies_balancer_equation(ctx, bals[i]); }),
        run_exact("triangular identity T(B-k) + T(B) = T(B+r)", ci, 0, n,
                  [&](std::size_t i) { return verify_triangular_identity(ctx, pairs[i]); }),
        run_exact("balancer conversions r_hat = 2B - 2r + 1 - 2k, m = B + r = (C-1)/2, B from r", ci, 0, n,
                  [&](std::size_t i) {
                      const auto& p = pairs[i];
                      const auto& b = bals[i];
                      return b.r_hat == 2 * p.B - 2 * b.r + 1 - 2 * k && counterbalancer_of(p) == p.B + b.r &&
                             balancing_from_balancer(ctx, b) == p.B;
                  }),
        run_exact("tandem step: balancer_of(step(p)) = step_balancer(balancer_of(p))", ci, 0, n,
                  [&](std::size_t i) {
                      return balancer_of(ctx, step_balancing(ctx, pairs[i])) == step_balancer(ctx, bals[i]);
                  }),
        run_exact("step round trips", ci, 0, n,
                  [&](std::size_t i) {
                      return step_balancing_inverse(ctx, step_balancing(ctx, pairs[i])) == pairs[i] &&
                             step_balancing(ctx, step_balancing_inverse(ctx, pairs[i])) == pairs[i] &&
                             step_balancer_inverse(ctx, step_balancer(ctx, bals[i])) == bals[i] &&
                             step_balancer(ctx, step_balancer_inverse(ctx, bals[i])) == bals[i];
                  }),
    };
}

}  // namespace gapbal
