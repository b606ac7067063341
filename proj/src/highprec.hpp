#pragma once

// Minimal RAII wrapper over an MPFR value with a per-object precision.

#include "gapbal/arithmetic.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace gapbal::detail {

class Real {
public:
    explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

    Real(const BigInt& n, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_str(v_, n.str().c_str(), 10, MPFR_RNDN);
    }

    Real(long n, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_si(v_, n, MPFR_RNDN);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(Real o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

    friend Real operator+(const Real& a, const Real& b) { Real r(a.bits()); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r(a.bits()); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r(a.bits()); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r(a.bits()); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

    friend Real sqrt(const Real& a) { Real r(a.bits()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real abs(const Real& a) { Real r(a.bits()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

    /// Scientific notation with `digits` significant digits, e.g. "1.2345e-08".
    std::string str(int digits) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

private:
    mpfr_t v_;
};

inline mpfr_prec_t bits_for_digits(unsigned digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16);
}

}  // namespace gapbal::detail
