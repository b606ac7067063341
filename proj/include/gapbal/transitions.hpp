#pragma once

// Transition maps carrying the i-th term of one class to the i-th term of
// another:
//
//   (x, y) -> (a x + b y + c,  8b x + a y + d)
//
// with d = (4 - 4k) b between balancing classes and d = 4k b between
// balancer classes.

#include "gapbal/classes.hpp"
#include "gapbal/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gapbal {

enum class TransitionKind { balancing, balancer };

struct TransitionMap {
    TransitionKind kind = TransitionKind::balancing;
    Rational a{1};
    Rational b{0};
    Rational c{0};
    Rational d{0};
    std::size_t source_class = 0;
    std::size_t target_class = 0;
    /// Target term i + target_shift is the image of source term i.
    std::size_t target_shift = 0;

    /// Coefficient equality only; class labels are ignored.
    bool same_coefficients(const TransitionMap& other) const {
        return kind == other.kind && a == other.a && b == other.b && c == other.c && d == other.d;
    }
};

/// Closed-form coefficients from the two starting pairs (x0, y0) -> (x0', y0').
TransitionMap balancing_transition_coefficients(const GapContext& ctx, const BalancingPair& from,
                                                const BalancingPair& to);
TransitionMap balancer_transition_coefficients(const GapContext& ctx, const BalancerPair& from,
                                               const BalancerPair& to);

/// Derives the map src[i] -> dst[i + target_shift] and checks it on i = 0, 1, 2.
/// Throws InvariantError if the check fails.
TransitionMap derive_transition(BalancingClass& src, BalancingClass& dst, std::size_t target_shift = 0);
TransitionMap derive_balancer_transition(BalancerClass& src, BalancerClass& dst, std::size_t target_shift = 0);

struct MapImage {
    Rational first;
    Rational second;
    bool is_integral() const { return first.is_integer() && second.is_integer(); }
};

MapImage apply(const TransitionMap& map, const BigInt& x, const BigInt& y);

/// The integer image, or nullopt (the "*" of a transition table) when either
/// component is not an integer. Never rounds.
std::optional<std::pair<BigInt, BigInt>> evaluate(const TransitionMap& map, const BigInt& x, const BigInt& y);

struct SymmetryEntry {
    TransitionKind kind;
    std::size_t from;
    std::size_t to;
    std::size_t conj_from;  // conjugate of `to`
    std::size_t conj_to;    // conjugate of `from`
    bool equal;
};

struct SymmetryReport {
    std::int64_t k = 0;
    std::vector<SymmetryEntry> entries;
    bool all_equal() const;
};

/// For every ordered class pair (P, Q), compares the map P -> Q with
/// conj(Q) -> conj(P), for balancing and balancer classes.
SymmetryReport check_conjugate_symmetry(const GapContext& ctx);

/// "(27x + 5y - 16)/23": the first row over a common denominator.
std::string format_first_row(const TransitionMap& map);
/// "(40x + 27y - 160)/23": the second row.
std::string format_second_row(const TransitionMap& map);

}  // namespace gapbal
