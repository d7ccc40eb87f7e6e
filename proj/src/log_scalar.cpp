#include "charlier/log_scalar.hpp"

#include <cmath>

namespace charlier {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::log1p;

SignedLogValue SignedLogValue::from_real(const Real& v) {
    if (v.is_zero()) return {0, CReal::zero_like(v)};
    return {v.sign() > 0 ? 1 : -1, log(abs(v))};
}

SignedLogValue SignedLogValue::from_log(int s, Real l) {
    if (s == 0) return {0, CReal::zero_like(l)};
    return {s, std::move(l)};
}

Real SignedLogValue::to_real() const {
    if (sign == 0) return CReal::zero_like(log_abs);
    Real m = exp(log_abs);
    return sign > 0 ? m : Real(-m);
}

SignedLogValue slv_mul(const SignedLogValue& x, const SignedLogValue& y) {
    if (x.sign == 0 || y.sign == 0) return {0, CReal::zero_like(x.log_abs)};
    return {x.sign * y.sign, x.log_abs + y.log_abs};
}

SignedLogValue slv_div(const SignedLogValue& x, const SignedLogValue& y) {
    if (y.sign == 0) throw DomainError("slv_div: division by exact zero");
    if (x.sign == 0) return x;
    return {x.sign * y.sign, x.log_abs - y.log_abs};
}

SignedLogValue slv_pow(const SignedLogValue& x, long k) {
    if (x.sign == 0) {
        if (k <= 0) throw DomainError("slv_pow: 0 to non-positive power");
        return x;
    }
    int s = (x.sign < 0 && (k % 2 != 0)) ? -1 : 1;
    return {s, x.log_abs * k};
}

SignedLogValue slv_add(const SignedLogValue& x, const SignedLogValue& y) {
    if (x.sign == 0) return y;
    if (y.sign == 0) return x;
    const SignedLogValue* big = &x;
    const SignedLogValue* small = &y;
    if (y.log_abs > x.log_abs) std::swap(big, small);
    Real d = small->log_abs - big->log_abs;  // <= 0
    Real e = exp(d);
    if (big->sign == small->sign)
        return {big->sign, big->log_abs + log1p(e)};
    Real m = log1p(-e);  // -inf when e rounds to 1 (cancellation to zero)
    if (!is_finite(m) || e == 1)
        return {0, CReal::zero_like(big->log_abs)};
    return {big->sign, big->log_abs + m};
}

Real normalize_phase(const Real& phi) {
    if (!is_finite(phi)) return phi;
    int digits = static_cast<int>(phi.precision());
    Real two_pi = 2 * pi_at(digits);
    Real r(0);
    r.precision(digits);
    mpfr_remainder(r.backend().data(), phi.backend().data(), two_pi.backend().data(), MPFR_RNDN);
    // remainder lands in [-pi, pi]; fold the -pi tie to +pi
    if (r <= -pi_at(digits)) r += two_pi;
    return r;
}

LogComplex LogComplex::zero(int digits) {
    LogComplex z;
    z.log_mod = make_real(0L, digits);
    mpfr_set_inf(z.log_mod.backend().data(), -1);
    z.phase = make_real(0L, digits);
    return z;
}

LogComplex LogComplex::one(int digits) {
    return {make_real(0L, digits), make_real(0L, digits)};
}

bool LogComplex::is_zero() const {
    return mpfr_inf_p(log_mod.backend().data()) && log_mod.sign() < 0;
}

LogComplex LogComplex::conjugated() const {
    LogComplex r{log_mod, normalize_phase(-phase)};
    return r;
}

LogComplex lc_from_polar_of_log(const Real& re_log_part, const Real& im_phase_part) {
    // -inf re part encodes exact zero and is allowed
    bool re_ok = is_finite(re_log_part) ||
                 (mpfr_inf_p(re_log_part.backend().data()) && re_log_part.sign() < 0);
    if (!re_ok || !is_finite(im_phase_part))
        throw DomainError("lc_from_polar_of_log: non-finite input");
    return {re_log_part, normalize_phase(im_phase_part)};
}

LogComplex lc_from_clog(const CReal& log_value) {
    return lc_from_polar_of_log(log_value.re, log_value.im);
}

LogComplex lc_from_creal(const CReal& value) {
    if (value.re.is_zero() && value.im.is_zero())
        return LogComplex::zero(static_cast<int>(value.re.precision()));
    return {log(charlier::abs(value)), arg(value)};
}

LogComplex lc_from_slv(const SignedLogValue& v) {
    if (v.sign == 0) return LogComplex::zero(static_cast<int>(v.log_abs.precision()));
    if (v.sign > 0) return {v.log_abs, CReal::zero_like(v.log_abs)};
    return {v.log_abs, pi_at(static_cast<int>(v.log_abs.precision()))};
}

LogComplex lc_from_real(const Real& v) { return lc_from_slv(SignedLogValue::from_real(v)); }

LogComplex lc_mul(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero() || b.is_zero())
        return LogComplex::zero(static_cast<int>(a.log_mod.precision()));
    return {a.log_mod + b.log_mod, normalize_phase(a.phase + b.phase)};
}

LogComplex lc_div(const LogComplex& a, const LogComplex& b) {
    if (b.is_zero()) throw DomainError("lc_div: division by exact zero");
    if (a.is_zero()) return a;
    return {a.log_mod - b.log_mod, normalize_phase(a.phase - b.phase)};
}

LogComplex lc_neg(const LogComplex& a) {
    if (a.is_zero()) return a;
    return {a.log_mod, normalize_phase(a.phase + pi_at(static_cast<int>(a.phase.precision())))};
}

LogComplex lc_pow(const LogComplex& a, const Real& p) {
    if (a.is_zero()) {
        if (p.sign() <= 0) throw DomainError("lc_pow: zero to non-positive power");
        return a;
    }
    return {a.log_mod * p, normalize_phase(a.phase * p)};
}

LogComplex lc_add(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const LogComplex* big = &a;
    const LogComplex* small = &b;
    if (b.log_mod > a.log_mod) std::swap(big, small);
    Real dlog = small->log_mod - big->log_mod;
    Real dphase = small->phase - big->phase;
    CReal w = exp(CReal(dlog, dphase));
    CReal s = w + make_real(1L, static_cast<int>(dlog.precision()));
    if (s.re.is_zero() && s.im.is_zero())
        return LogComplex::zero(static_cast<int>(a.log_mod.precision()));
    Real m = charlier::abs(s);
    if (m.is_zero()) return LogComplex::zero(static_cast<int>(a.log_mod.precision()));
    return {big->log_mod + log(m), normalize_phase(big->phase + arg(s))};
}

SignedLogValue lc_to_slv(const LogComplex& v, double tol) {
    if (v.is_zero()) return SignedLogValue::zero(static_cast<int>(v.log_mod.precision()));
    double ph = std::fabs(to_double(v.phase));
    if (ph <= tol) return {1, v.log_mod};
    if (std::fabs(ph - 3.14159265358979323846) <= tol) return {-1, v.log_mod};
    throw DomainError("lc_to_slv: phase is not 0 or pi within tolerance");
}

CReal lc_to_creal(const LogComplex& v) {
    int digits = static_cast<int>(v.log_mod.precision());
    if (v.is_zero()) return CReal(make_real(0L, digits));
    return exp(CReal(v.log_mod, v.phase));
}

double lc_log10_mod(const LogComplex& v) {
    if (v.is_zero()) return -std::numeric_limits<double>::infinity();
    return to_double(v.log_mod * make_real("0.43429448190325182765112891891660508229",
                                           static_cast<int>(v.log_mod.precision())));
}

double lc_phase_double(const LogComplex& v) { return to_double(v.phase); }

double lc_rel_diff(const LogComplex& a, const LogComplex& b) {
    if (b.is_zero()) return a.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
    if (a.is_zero()) return 1.0;
    Real dlog = a.log_mod - b.log_mod;
    Real dphase = a.phase - b.phase;
    double dl = to_double(dlog);
    if (dl > 500.0) return std::numeric_limits<double>::infinity();
    CReal w = exp(CReal(dlog, normalize_phase(dphase)));
    CReal d = w - make_real(1L, static_cast<int>(dlog.precision()));
    return to_double(charlier::abs(d));
}

}  // namespace charlier
