#include "gapbal/series.hpp"

#include "gapbal/errors.hpp"

#include <algorithm>

namespace gapbal {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::substitute_power(std::size_t n) const {
    if (n == 0) throw DomainError("substitute_power needs n >= 1");
    if (coeffs_.empty()) return {};
    std::vector<BigInt> out((coeffs_.size() - 1) * n + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * n] = coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shift(std::size_t n) const {
    if (coeffs_.empty()) return {};
    std::vector<BigInt> out(n);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const BigInt& c = coeffs_[idx];
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1 || idx == 0) out += mag.str();
        if (idx >= 1) out += "s";
        if (idx >= 2) out += "^" + std::to_string(idx);
    }
    return out;
}

bool RationalFunction::equivalent(const RationalFunction& other) const {
    return numerator * other.denominator == other.numerator * denominator;
}

Polynomial class_denominator() { return Polynomial({1, -7, 7, -1}); }

RationalFunction class_genfun(BalancingClass& cls) {
    const BigInt k = cls.context().gap();
    const BigInt b0 = cls.term(0).B;
    const BigInt b1 = cls.term(1).B;
    return {Polynomial({b0, b1 - 7 * b0, 2 - 2 * k - b1 + 6 * b0}), class_denominator()};
}

RationalFunction interleaved_genfun(std::vector<BalancingClass>& classes) {
    const std::size_t n = classes.size();
    if (n == 0) throw DomainError("interleaved generating function needs at least one class");
    Polynomial numerator;
    for (std::size_t i = 0; i < n; ++i) {
        numerator = numerator + class_genfun(classes[i]).numerator.substitute_power(n).shift(i);
    }
    return {numerator, class_denominator().substitute_power(n)};
}

RationalFunction interleaved_genfun(const GapContext& ctx) {
    std::vector<BalancingClass> classes = classes_for(ctx);
    return interleaved_genfun(classes);
}

std::vector<BigInt> expand(const RationalFunction& rf, std::size_t count) {
    const BigInt d0 = rf.denominator.coeff(0);
    if (d0 != 1 && d0 != -1) {
        throw DomainError("series expansion needs a denominator with constant term +-1, got " + d0.str());
    }
    // a_j = (p_j - sum_{i>=1} d_i a_{j-i}) / d0, and dividing by +-1 is a sign flip.
    const auto& d = rf.denominator.coeffs();
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        BigInt acc = rf.numerator.coeff(j);
        for (std::size_t i = 1; i < d.size() && i <= j; ++i) acc -= d[i] * out[j - i];
        out.push_back(d0 == 1 ? acc : BigInt(-acc));
    }
    return out;
}

}  // namespace gapbal
