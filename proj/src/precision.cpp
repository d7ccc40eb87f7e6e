#include "charlier/precision.hpp"

#include <cmath>

namespace charlier {

int digits_for_bits(int bits) {
    if (bits < 64) bits = 64;
    return static_cast<int>(std::ceil(bits * 0.30102999566398119521)) + 2;
}

Real make_real(double v, int digits) {
    Real r(v);
    r.precision(digits);
    return r;
}

Real make_real(long v, int digits) {
    Real r(v);
    r.precision(digits);
    return r;
}

Real make_real(const std::string& decimal, int digits) {
    Real r(0);
    r.precision(digits);
    r.assign(decimal);
    return r;
}

Real pi_at(int digits) {
    Real p(0);
    p.precision(digits);
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

bool is_finite(const Real& r) {
    return mpfr_number_p(r.backend().data()) != 0;
}

CReal operator+(const CReal& a, const CReal& b) { return {a.re + b.re, a.im + b.im}; }
CReal operator-(const CReal& a, const CReal& b) { return {a.re - b.re, a.im - b.im}; }
CReal operator-(const CReal& a) { return {-a.re, -a.im}; }

CReal operator*(const CReal& a, const CReal& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CReal operator/(const CReal& a, const CReal& b) {
    // scaled to avoid overflow in |b|^2
    Real br = boost::multiprecision::abs(b.re), bi = boost::multiprecision::abs(b.im);
    if (br >= bi) {
        Real q = b.im / b.re;
        Real d = b.re + b.im * q;
        return {(a.re + a.im * q) / d, (a.im - a.re * q) / d};
    }
    Real q = b.re / b.im;
    Real d = b.re * q + b.im;
    return {(a.re * q + a.im) / d, (a.im * q - a.re) / d};
}

CReal conj(const CReal& z) { return {z.re, -z.im}; }

Real abs(const CReal& z) {
    if (z.im.is_zero()) return boost::multiprecision::abs(z.re);
    if (z.re.is_zero()) return boost::multiprecision::abs(z.im);
    return boost::multiprecision::hypot(z.re, z.im);
}

Real arg(const CReal& z) { return boost::multiprecision::atan2(z.im, z.re); }

CReal sqrt(const CReal& z) {
    using boost::multiprecision::sqrt;
    using boost::multiprecision::abs;
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return CReal(sqrt(z.re));
        return CReal(CReal::zero_like(z.re), sqrt(-z.re));
    }
    // w = sqrt((|z| + |re|)/2); principal branch
    Real m = charlier::abs(z);
    Real w = sqrt((m + abs(z.re)) / 2);
    if (z.re.sign() >= 0) return {w, z.im / (2 * w)};
    Real iw = z.im / (2 * w);
    if (z.im.sign() >= 0) return {iw, w};
    return {-iw, w};
}

CReal log(const CReal& z) {
    using boost::multiprecision::log;
    return {log(charlier::abs(z)), arg(z)};
}

CReal exp(const CReal& z) {
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    using boost::multiprecision::cos;
    Real m = exp(z.re);
    if (z.im.is_zero()) return CReal(m);
    return {m * cos(z.im), m * sin(z.im)};
}

void sin_cos_pi(const Real& x, Real& sin_out, Real& cos_out) {
    using boost::multiprecision::round;
    using boost::multiprecision::sin;
    using boost::multiprecision::cos;
    Real k = round(x);
    Real r = x - k;  // in [-1/2, 1/2], exact subtraction near representable x
    Real p = pi_at(static_cast<int>(x.precision()));
    Real s = sin(p * r), c = cos(p * r);
    // (-1)^k factor
    bool odd = !mpfr_integer_p(Real(k / 2).backend().data());
    if (odd) { s = -s; c = -c; }
    sin_out = s;
    cos_out = c;
}

Real dist_to_unit_segment(const CReal& y) {
    using boost::multiprecision::abs;
    if (y.re.sign() < 0) return charlier::abs(y);
    if (y.re > 1) return charlier::abs(CReal(y.re - 1, y.im));
    return abs(y.im);
}

}  // namespace charlier
