#pragma once

#include "gapbal/arithmetic.hpp"

#include <compare>
#include <string>

namespace gapbal {

// Exact rational kept in lowest terms with a positive denominator.
// Zero is always 0/1.
class Rational {
public:
    Rational() = default;
    Rational(BigInt num) : num_(std::move(num)) {}  // NOLINT: implicit by design of arithmetic types
    Rational(std::int64_t num) : num_(num) {}       // NOLINT
    Rational(BigInt num, BigInt den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }

    /// Requires is_integer(); throws InvariantError otherwise.
    const BigInt& as_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    void normalize();

    BigInt num_{0};
    BigInt den_{1};
};

}  // namespace gapbal
