#include "gapbal/arithmetic.hpp"

#include "gapbal/errors.hpp"

#include <cmath>
#include <limits>

namespace gapbal {
namespace {

// Exact for n < 2^64: the double estimate is off by at most one after rounding.
std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw DomainError("isqrt of negative number " + n.str());
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return BigInt(isqrt_u64(n.convert_to<std::uint64_t>()));
    }
    // Newton from above: x0 >= sqrt(n) makes the iterates decrease monotonically
    // until they reach floor(sqrt(n)).
    const auto bits = boost::multiprecision::msb(n);
    BigInt x = BigInt(1) << (bits / 2 + 1);
    while (true) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

std::optional<BigInt> perfect_square_root(const BigInt& n) {
    if (n < 0) return std::nullopt;
    // Squares are 0, 1, 4, 9 mod 16; rejects 3/4 of candidates without a root.
    const auto low = static_cast<unsigned>(BigInt(n & 15).convert_to<std::uint64_t>());
    if (low != 0 && low != 1 && low != 4 && low != 9) return std::nullopt;
    BigInt r = isqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

std::uint64_t count_divisors(const BigInt& n) {
    if (n < 1) throw DomainError("count_divisors needs n >= 1, got " + n.str());
    std::uint64_t count = 0;
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        const auto v = n.convert_to<std::uint64_t>();
        const auto root = isqrt_u64(v);
        for (std::uint64_t d = 1; d <= root; ++d) {
            if (v % d == 0) count += (d * d == v) ? 1 : 2;
        }
        return count;
    }
    const BigInt root = isqrt(n);
    for (BigInt d = 1; d <= root; ++d) {
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    }
    return count;
}

BigInt triangular(const BigInt& i) {
    if (i < 0) throw DomainError("triangular index must be nonnegative, got " + i.str());
    return i * (i + 1) / 2;
}

BigInt parse_bigint(const std::string& text) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    if (pos == text.size()) throw DomainError("not an integer: '" + text + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw DomainError("not an integer: '" + text + "'");
    }
    BigInt value(text[0] == '+' ? text.substr(1) : text);
    return value;
}

}  // namespace gapbal
