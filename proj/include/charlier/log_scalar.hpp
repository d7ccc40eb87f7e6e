#pragma once

#include "charlier/precision.hpp"

// Overflow-proof scalars: a signed real stored as (sign, log|value|) and a
// complex value stored as (log-modulus, phase). These survive the n^n-scale
// magnitudes the asymptotic formulas produce. Exact zero is sign 0 for
// SignedLogValue and log_mod = -inf for LogComplex.

namespace charlier {

struct SignedLogValue {
    int sign = 0;       // -1, 0, +1
    Real log_abs{0};    // natural log of |value|; canonicalized to 0 when sign == 0

    static SignedLogValue zero(int digits) { return {0, make_real(0L, digits)}; }
    static SignedLogValue from_real(const Real& v);
    // value = s * exp(l)
    static SignedLogValue from_log(int s, Real l);

    bool is_zero() const { return sign == 0; }
    Real to_real() const;                 // may overflow to +-inf for huge log_abs
    SignedLogValue negated() const { return {-sign, log_abs}; }
};

SignedLogValue slv_mul(const SignedLogValue& x, const SignedLogValue& y);
SignedLogValue slv_div(const SignedLogValue& x, const SignedLogValue& y);
SignedLogValue slv_pow(const SignedLogValue& x, long k);
// log-sum-exp anchored at the larger log_abs; total function
SignedLogValue slv_add(const SignedLogValue& x, const SignedLogValue& y);
inline SignedLogValue slv_sub(const SignedLogValue& x, const SignedLogValue& y) {
    return slv_add(x, y.negated());
}

struct LogComplex {
    Real log_mod{0};
    Real phase{0};      // radians, normalized to (-pi, pi], ties to +pi

    static LogComplex zero(int digits);
    static LogComplex one(int digits);

    bool is_zero() const;
    LogComplex conjugated() const;
};

// normalize an angle into (-pi, pi], ties to +pi
Real normalize_phase(const Real& phi);

// exp(re_log_part + i*im_phase_part); domain error on non-finite input
LogComplex lc_from_polar_of_log(const Real& re_log_part, const Real& im_phase_part);
LogComplex lc_from_clog(const CReal& log_value);  // same, packaged
LogComplex lc_from_creal(const CReal& value);
LogComplex lc_from_slv(const SignedLogValue& v);
LogComplex lc_from_real(const Real& v);

LogComplex lc_mul(const LogComplex& a, const LogComplex& b);
LogComplex lc_div(const LogComplex& a, const LogComplex& b);
LogComplex lc_neg(const LogComplex& a);
LogComplex lc_pow(const LogComplex& a, const Real& p);  // principal: phase from normalized rep
LogComplex lc_add(const LogComplex& a, const LogComplex& b);
inline LogComplex lc_sub(const LogComplex& a, const LogComplex& b) { return lc_add(a, lc_neg(b)); }

// defined only when phase is 0 or pi within tol; error otherwise
SignedLogValue lc_to_slv(const LogComplex& v, double tol = 1e-9);

CReal lc_to_creal(const LogComplex& v);   // may over/underflow for huge |log_mod|
double lc_log10_mod(const LogComplex& v);
double lc_phase_double(const LogComplex& v);

// |a - b| / |b| as a double (diagnostic; saturates at huge values)
double lc_rel_diff(const LogComplex& a, const LogComplex& b);

}  // namespace charlier
