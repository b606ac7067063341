#include "gapbal/transitions.hpp"

#include "gapbal/errors.hpp"

namespace gapbal {

TransitionMap balancing_transition_coefficients(const GapContext& ctx, const BalancingPair& from,
                                                const BalancingPair& to) {
    const BigInt k = ctx.gap();
    const BigInt& n = ctx.pell_constant();
    const BigInt& x = from.B;
    const BigInt& y = from.C;
    const BigInt& z = to.B;
    const BigInt& w = to.C;

    TransitionMap map;
    map.kind = TransitionKind::balancing;
    map.a = -Rational(8 * x * z + 4 * (1 - k) * (x + z) + ctx.odd_square() - y * w - n, n);
    map.b = Rational(2 * (y * z - x * w) + (1 - k) * (y - w), 2 * n);
    map.c = Rational((1 - k) * (8 * x * (x - z) + 4 * (1 - k) * (x - z) - y * (y - w)), 2 * n);
    map.d = Rational(4 - 4 * k) * map.b;
    return map;
}

TransitionMap balancer_transition_coefficients(const GapContext& ctx, const BalancerPair& from,
                                               const BalancerPair& to) {
    const BigInt k = ctx.gap();
    const BigInt& n = ctx.pell_constant();
    const BigInt& r = from.r;
    const BigInt& rh = from.r_hat;
    const BigInt& s = to.r;
    const BigInt& sh = to.r_hat;

    TransitionMap map;
    map.kind = TransitionKind::balancer;
    map.a = Rational(8 * r * s + 4 * k * (r + s) + 2 * k * k - rh * sh, n);
    map.b = Rational(2 * (r * sh - rh * s) + k * (sh - rh), 2 * n);
    map.c = Rational(k * (8 * r * (s - r) + 4 * k * (s - r) + rh * (rh - sh)), 2 * n);
    map.d = Rational(4 * k) * map.b;
    return map;
}

MapImage apply(const TransitionMap& map, const BigInt& x, const BigInt& y) {
    const Rational rx(x);
    const Rational ry(y);
    return {map.a * rx + map.b * ry + map.c, Rational(8) * map.b * rx + map.a * ry + map.d};
}

std::optional<std::pair<BigInt, BigInt>> evaluate(const TransitionMap& map, const BigInt& x, const BigInt& y) {
    MapImage img = apply(map, x, y);
    if (!img.is_integral()) return std::nullopt;
    return std::make_pair(img.first.as_integer(), img.second.as_integer());
}

namespace {

void require_same_context(const GapContext& a, const GapContext& b) {
    if (!(a == b)) throw DomainError("transition maps need classes of the same gap size");
}

[[noreturn]] void verification_failed(std::size_t i) {
    throw InvariantError("derived transition map does not carry term " + std::to_string(i));
}

}  // namespace

TransitionMap derive_transition(BalancingClass& src, BalancingClass& dst, std::size_t target_shift) {
    require_same_context(src.context(), dst.context());
    const auto shift = static_cast<std::int64_t>(target_shift);
    const BalancingPair from = src.term(0);
    TransitionMap map = balancing_transition_coefficients(src.context(), from, dst.term(shift));
    map.source_class = src.index();
    map.target_class = dst.index();
    map.target_shift = target_shift;
    for (std::int64_t i = 0; i < 3; ++i) {
        const BalancingPair p = src.term(i);
        auto img = evaluate(map, p.B, p.C);
        const BalancingPair want = dst.term(i + shift);
        if (!img || img->first != want.B || img->second != want.C) verification_failed(static_cast<std::size_t>(i));
    }
    return map;
}

TransitionMap derive_balancer_transition(BalancerClass& src, BalancerClass& dst, std::size_t target_shift) {
    require_same_context(src.context(), dst.context());
    const BalancerPair from = src.term(0);
    TransitionMap map = balancer_transition_coefficients(src.context(), from, dst.term(target_shift));
    map.source_class = src.index();
    map.target_class = dst.index();
    map.target_shift = target_shift;
    for (std::size_t i = 0; i < 3; ++i) {
        const BalancerPair p = src.term(i);
        auto img = evaluate(map, p.r, p.r_hat);
        const BalancerPair want = dst.term(i + target_shift);
        if (!img || img->first != want.r || img->second != want.r_hat) verification_failed(i);
    }
    return map;
}

bool SymmetryReport::all_equal() const {
    for (const auto& e : entries) {
        if (!e.equal) return false;
    }
    return true;
}

SymmetryReport check_conjugate_symmetry(const GapContext& ctx) {
    std::vector<BalancingClass> classes = classes_for(ctx);
    std::vector<BalancerClass> balancers;
    balancers.reserve(classes.size());
    for (const auto& cls : classes) balancers.push_back(tandem_balancer_class(cls));

    SymmetryReport report;
    report.k = ctx.k();
    const std::size_t n = classes.size();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t cq = conjugate_class_index(classes, q);
            const std::size_t cp = conjugate_class_index(classes, p);

            const TransitionMap fwd = derive_transition(classes[p], classes[q]);
            const TransitionMap back = derive_transition(classes[cq], classes[cp]);
            report.entries.push_back({TransitionKind::balancing, p, q, cq, cp, fwd.same_coefficients(back)});

            const TransitionMap bfwd = derive_balancer_transition(balancers[p], balancers[q]);
            const TransitionMap bback = derive_balancer_transition(balancers[cq], balancers[cp]);
            report.entries.push_back({TransitionKind::balancer, p, q, cq, cp, bfwd.same_coefficients(bback)});
        }
    }
    return report;
}

namespace {

// Writes c1*x + c2*y + c3 over the least common denominator of the three.
std::string format_affine(const Rational& cx, const Rational& cy, const Rational& c0) {
    using boost::multiprecision::lcm;
    const BigInt den = lcm(lcm(cx.den(), cy.den()), c0.den());
    const BigInt nx = cx.num() * (den / cx.den());
    const BigInt ny = cy.num() * (den / cy.den());
    const BigInt n0 = c0.num() * (den / c0.den());

    std::string out;
    auto term = [&out](const BigInt& coef, const char* var) {
        if (coef == 0) return;
        const bool neg = coef < 0;
        const BigInt mag = neg ? BigInt(-coef) : coef;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1 || *var == '\0') out += mag.str();
        out += var;
    };
    term(nx, "x");
    term(ny, "y");
    term(n0, "");
    if (out.empty()) out = "0";
    if (den == 1) return out;
    return "(" + out + ")/" + den.str();
}

}  // namespace

std::string format_first_row(const TransitionMap& map) { return format_affine(map.a, map.b, map.c); }

std::string format_second_row(const TransitionMap& map) {
    return format_affine(Rational(8) * map.b, map.a, map.d);
}

}  // namespace gapbal
