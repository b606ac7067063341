#pragma once

// Generating functions of classes as exact integer-coefficient rational functions.

#include "gapbal/classes.hpp"

#include <string>
#include <vector>

namespace gapbal {

// Dense polynomial in s, coeffs[i] multiplies s^i. Trailing zeros are trimmed,
// so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    /// p(s) -> p(s^n)
    Polynomial substitute_power(std::size_t n) const;
    /// p(s) -> s^n p(s)
    Polynomial shift(std::size_t n) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Highest power first, e.g. "5s^2 - 41s + 20".
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

struct RationalFunction {
    Polynomial numerator;
    Polynomial denominator;

    /// Equal as rational functions: p/q == r/t iff p t == r q.
    bool equivalent(const RationalFunction& other) const;
};

/// (1 - s)(1 - 6s + s^2) = 1 - 7s + 7s^2 - s^3
Polynomial class_denominator();

/// B0 + (B1 - 7B0)s + (2 - 2k - B1 + 6B0)s^2 over (1 - s)(1 - 6s + s^2).
RationalFunction class_genfun(BalancingClass& cls);

/// sum_{i=1..n} s^(i-1) G_i(s^n) over the common denominator D(s^n), where
/// G_i are the class generating functions in ascending-B0 order.
RationalFunction interleaved_genfun(std::vector<BalancingClass>& classes);
RationalFunction interleaved_genfun(const GapContext& ctx);

/// First `count` Taylor coefficients at s = 0. The denominator's constant term
/// must be +1 or -1; anything else is a DomainError.
std::vector<BigInt> expand(const RationalFunction& rf, std::size_t count);

}  // namespace gapbal
