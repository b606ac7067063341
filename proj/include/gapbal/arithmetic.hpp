#pragma once

// Exact integer helpers shared by every other module. Nothing here rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace gapbal {

using BigInt = boost::multiprecision::cpp_int;

/// floor(sqrt(n)) for n >= 0. Throws DomainError for negative n.
BigInt isqrt(const BigInt& n);

/// The nonnegative root when n is a perfect square, nullopt otherwise
/// (including every negative n).
std::optional<BigInt> perfect_square_root(const BigInt& n);

inline bool is_perfect_square(const BigInt& n) { return perfect_square_root(n).has_value(); }

/// Number of positive divisors of n >= 1, by trial division up to isqrt(n).
std::uint64_t count_divisors(const BigInt& n);

/// i(i+1)/2 for i >= 0.
BigInt triangular(const BigInt& i);

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Parses an optionally signed decimal integer; throws DomainError on junk.
BigInt parse_bigint(const std::string& text);

}  // namespace gapbal
