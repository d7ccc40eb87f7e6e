#include "charlier/special.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace charlier {

using boost::multiprecision::abs;
using boost::multiprecision::cos;
using boost::multiprecision::exp;
using boost::multiprecision::lgamma;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::round;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;
using boost::multiprecision::tgamma;

namespace {

// ---------------------------------------------------------------------------
// Airy

constexpr double kSeriesRadius = 9.0;

inline Real abs_of(const Real& v) { return abs(v); }
inline Real abs_of(const CReal& v) { return charlier::abs(v); }

// extra decimal digits lost to cancellation when summing the Maclaurin series
int airy_series_guard(double zmag) {
    double nats = 4.0 / 3.0 * std::pow(zmag, 1.5);
    return 12 + static_cast<int>(nats * 0.4343 * 1.15);
}

// digits delivered by the optimally truncated asymptotic expansion at |z|
double airy_asymptotic_floor_digits(double zmag) {
    return 4.0 / 3.0 * std::pow(zmag, 1.5) * 0.4343;
}

// Maclaurin solution pair f, g and derivatives, templated over real/complex.
// Term recurrences: f_k = f_{k-1} z^3/((3k)(3k-1)), g_k = g_{k-1} z^3/((3k+1)(3k)),
// g'_k = g'_{k-1} z^3/((3k)(3k-2)); for f' the k-th loop step supplies term k+1
// via f'_{k+1} = f'_k z^3/((3k+2)(3k)).
template <class T>
void airy_fg(const T& z, int digits, T& f, T& g, T& fp, T& gp) {
    const Real one = make_real(1L, digits);
    const Real eps = pow(make_real(10L, digits), -(digits + 5));
    T z3 = z * z * z;
    T tf = T(one);
    T tg = z;
    T tgp = T(one);
    T tfp = z * z / make_real(2L, digits);
    f = tf;
    g = tg;
    gp = tgp;
    fp = tfp;
    for (long k = 1; k < 8000; ++k) {
        tf = tf * z3 / make_real(3 * k * (3 * k - 1), digits);
        tg = tg * z3 / make_real((3 * k + 1) * (3 * k), digits);
        tgp = tgp * z3 / make_real(3 * k * (3 * k - 2), digits);
        tfp = tfp * z3 / make_real((3 * k + 2) * (3 * k), digits);
        f = f + tf;
        g = g + tg;
        gp = gp + tgp;
        fp = fp + tfp;
        Real scale = abs_of(f) + abs_of(g) + one;
        Real term = abs_of(tf) + abs_of(tg) + abs_of(tfp) + abs_of(tgp);
        if (term < scale * eps) return;
    }
    throw Error("airy series did not converge");
}

// u_k, v_k of the large-argument expansions
void airy_uv(std::vector<Real>& u, std::vector<Real>& v, int count, int digits) {
    u.assign(count, make_real(0L, digits));
    v.assign(count, make_real(0L, digits));
    u[0] = make_real(1L, digits);
    v[0] = make_real(1L, digits);
    for (int k = 1; k < count; ++k) {
        u[k] = u[k - 1] * make_real((6L * k - 5) * (6L * k - 3) * (6L * k - 1), digits) /
               make_real((2L * k - 1) * 216L * k, digits);
        v[k] = u[k] * make_real(6L * k + 1, digits) / make_real(1L - 6L * k, digits);
    }
}

}  // namespace

AiryPair airy_eval_series(const Real& z, int digits) {
    int work = digits + airy_series_guard(std::fabs(to_double(z)));
    Real zw = z;
    zw.precision(work);
    Real f, g, fp, gp;
    airy_fg<Real>(zw, work, f, g, fp, gp);
    Real third = make_real(1L, work) / 3;
    Real c1 = pow(make_real(3L, work), -2 * third) / tgamma(2 * third);
    Real c2 = pow(make_real(3L, work), -third) / tgamma(third);
    Real s3 = sqrt(make_real(3L, work));
    AiryPair r{c1 * f - c2 * g, c1 * fp - c2 * gp, s3 * (c1 * f + c2 * g),
               s3 * (c1 * fp + c2 * gp)};
    r.ai.precision(digits + 5);
    r.ai_prime.precision(digits + 5);
    r.bi.precision(digits + 5);
    r.bi_prime.precision(digits + 5);
    return r;
}

AiryPair airy_eval_asymptotic(const Real& z, int digits) {
    int work = digits + 10;
    Real x = abs(z);
    x.precision(work);
    Real zeta = 2 * x * sqrt(x) / 3;
    Real eps = pow(make_real(10L, work), -(digits + 5));
    std::vector<Real> u, v;
    airy_uv(u, v, 120, work);
    Real q4 = pow(x, make_real(0.25, work));
    Real spi = sqrt(pi_at(work));
    if (z.sign() > 0) {
        Real su = make_real(0L, work), sv = su, su_p = su, sv_p = su;
        Real pw = make_real(1L, work);
        Real prev_mag = make_real(0L, work);
        for (size_t k = 0; k < u.size(); ++k) {
            Real tu = u[k] * pw, tv = v[k] * pw;
            Real mag = abs(tu);
            if (k > 0 && mag > prev_mag) break;  // past optimal truncation
            int s = (k % 2 == 0) ? 1 : -1;
            su += s * tu;
            sv += s * tv;
            su_p += tu;
            sv_p += tv;
            if (mag < eps) break;
            prev_mag = mag;
            pw /= zeta;
        }
        Real em = exp(-zeta), ep = exp(zeta);
        return {em / (2 * spi * q4) * su, -q4 * em / (2 * spi) * sv,
                ep / (spi * q4) * su_p, q4 * ep / spi * sv_p};
    }
    // oscillatory side
    Real c = cos(zeta - pi_at(work) / 4), s = sin(zeta - pi_at(work) / 4);
    Real se = make_real(0L, work), so = se, sve = se, svo = se;
    Real pw = make_real(1L, work);
    Real prev_mag = make_real(0L, work);
    for (size_t k = 0; k < u.size(); ++k) {
        Real tu = u[k] * pw, tv = v[k] * pw;
        Real mag = abs(tu);
        if (k > 0 && mag > prev_mag) break;
        int half = static_cast<int>(k / 2);
        int sgn = (half % 2 == 0) ? 1 : -1;
        if (k % 2 == 0) {
            se += sgn * tu;
            sve += sgn * tv;
        } else {
            so += sgn * tu;
            svo += sgn * tv;
        }
        if (mag < eps) break;
        prev_mag = mag;
        pw /= zeta;
    }
    return {(c * se + s * so) / (spi * q4), q4 * (s * sve - c * svo) / spi,
            (-s * se + c * so) / (spi * q4), q4 * (c * sve + s * svo) / spi};
}

AiryPair airy_eval(const Real& z, int digits) {
    if (!is_finite(z)) throw DomainError("airy_eval: non-finite argument");
    double zd = std::fabs(to_double(z));
    if (zd <= kSeriesRadius || airy_asymptotic_floor_digits(zd) < digits + 3)
        return airy_eval_series(z, digits);
    return airy_eval_asymptotic(z, digits);
}

RotatedAiryValue airy_rotated(const Real& s, AiryRotation rot, int digits) {
    if (!is_finite(s)) throw DomainError("airy_rotated: non-finite argument");
    AiryPair p = airy_eval(s, digits);
    // Ai(s w)   = e^{+i pi/3} (Ai(s) - i Bi(s))/2
    // Ai(s w^2) = e^{-i pi/3} (Ai(s) + i Bi(s))/2
    int sgn = (rot == AiryRotation::omega) ? 1 : -1;
    CReal half(p.ai / 2, -sgn * p.bi / 2);
    Real ph = sgn * pi_at(digits) / 3;
    LogComplex v = lc_mul(lc_from_creal(half),
                          lc_from_polar_of_log(make_real(0L, digits), ph));
    return {v, rot};
}

CReal airy_ai_complex(const CReal& z, int digits) {
    double zd = to_double(charlier::abs(z));
    if (zd <= kSeriesRadius || airy_asymptotic_floor_digits(zd) < digits + 3) {
        int work = digits + airy_series_guard(zd);
        CReal zw(z.re, z.im);
        zw.re.precision(work);
        zw.im.precision(work);
        CReal f, g, fp, gp;
        airy_fg<CReal>(zw, work, f, g, fp, gp);
        Real third = make_real(1L, work) / 3;
        Real c1 = pow(make_real(3L, work), -2 * third) / tgamma(2 * third);
        Real c2 = pow(make_real(3L, work), -third) / tgamma(third);
        CReal r = f * c1 - g * c2;
        r.re.precision(digits + 5);
        r.im.precision(digits + 5);
        return r;
    }
    if (std::fabs(to_double(arg(z))) > 2.8)
        throw DomainError("airy_ai_complex: argument too close to the negative axis");
    int work = digits + 10;
    CReal zw(z.re, z.im);
    zw.re.precision(work);
    zw.im.precision(work);
    CReal sq = sqrt(zw);
    CReal zeta = zw * sq * make_real(2L, work) / make_real(3L, work);
    std::vector<Real> u, v;
    airy_uv(u, v, 120, work);
    CReal sum(make_real(0L, work));
    CReal pw(make_real(1L, work));
    Real prev_mag = make_real(0L, work);
    Real eps = pow(make_real(10L, work), -(digits + 5));
    for (size_t k = 0; k < u.size(); ++k) {
        CReal t = pw * u[k];
        Real mag = charlier::abs(t);
        if (k > 0 && mag > prev_mag) break;
        sum = (k % 2 == 0) ? sum + t : sum - t;
        if (mag < eps) break;
        prev_mag = mag;
        pw = pw / zeta;
    }
    CReal q4 = sqrt(sq);  // z^{1/4}, principal
    return exp(-zeta) * sum / (q4 * (2 * sqrt(pi_at(work))));
}

// ---------------------------------------------------------------------------
// log Gamma

namespace {

// B_{2j}, j = 1.., exact fractions
struct Frac {
    const char* num;
    const char* den;
};
constexpr std::array<Frac, 30> kBernoulli = {{
    {"1", "6"}, {"-1", "30"}, {"1", "42"}, {"-1", "30"}, {"5", "66"},
    {"-691", "2730"}, {"7", "6"}, {"-3617", "510"}, {"43867", "798"},
    {"-174611", "330"}, {"854513", "138"}, {"-236364091", "2730"},
    {"8553103", "6"}, {"-23749461029", "870"}, {"8615841276005", "14322"},
    {"-7709321041217", "510"}, {"2577687858367", "6"},
    {"-26315271553053477373", "1919190"}, {"2929993913841559", "6"},
    {"-261082718496449122051", "13530"}, {"1520097643918070802691", "1806"},
    {"-27833269579301024235023", "690"}, {"596451111593912163277961", "282"},
    {"-5609403368997817686249127547", "46410"},
    {"495057205241079648212477525", "66"},
    {"-801165718135489957347924991853", "1590"},
    {"29149963634884862421418123812691", "798"},
    {"-2479392929313226753685415739663229", "870"},
    {"84483613348880041862046775994036021", "354"},
    {"-1215233140483755572040304994079820246041491", "56786730"},
}};

bool near_nonpositive_integer(const CReal& z, int digits, Real* which = nullptr) {
    Real tol = pow(make_real(10L, digits), -(digits - 6));
    Real scale = make_real(1L, digits) + charlier::abs(z);
    if (abs(z.im) > tol * scale) return false;
    Real k = round(z.re);
    if (k.sign() > 0) return false;
    if (abs(z.re - k) > tol * scale) return false;
    if (which) *which = k;
    return true;
}

// Stirling with a recurrence lift pushing Re into the series' comfort zone.
// With the 30-entry Bernoulli table the tail at Re >= R is ~ 10^{30.8 - 59 log10 R};
// the +48 margin also absorbs the angle penalty for |arg z| up to ~pi/2.
CReal log_gamma_stirling(const CReal& w, int digits) {
    int work = digits + 12;
    double r_needed = std::max(14.0, std::pow(10.0, (digits + 48.0) / 59.0));
    CReal z(w.re, w.im);
    z.re.precision(work);
    z.im.precision(work);
    long m = 0;
    double re = to_double(w.re);
    double zmag = to_double(charlier::abs(w));
    if (zmag < r_needed) m = static_cast<long>(std::ceil(r_needed - re)) + 1;
    CReal lift(make_real(0L, work));
    for (long k = 0; k < m; ++k) lift = lift + log(z + make_real(k, work));
    CReal zs = z + make_real(m, work);
    CReal lg = (zs - make_real(0.5, work)) * log(zs) - zs +
               CReal(log(2 * pi_at(work)) / 2);
    CReal z2 = zs * zs;
    CReal p = zs;
    Real eps = pow(make_real(10L, work), -(digits + 8));
    for (size_t j = 0; j < kBernoulli.size(); ++j) {
        Real b = make_real(kBernoulli[j].num, work) / make_real(kBernoulli[j].den, work);
        long tj = static_cast<long>(2 * (j + 1));
        CReal term = CReal(b / make_real(tj * (tj - 1), work)) / p;
        lg = lg + term;
        if (charlier::abs(term) < eps) break;
        p = p * z2;
    }
    return lg - lift;
}

}  // namespace

bool gamma_is_pole(const CReal& z, int digits) { return near_nonpositive_integer(z, digits); }

LogComplex log_gamma_real(const Real& x, int digits) {
    int work = digits + 12;
    Real xw = x;
    xw.precision(work);
    if (x >= make_real(0.5, digits))
        return {lgamma(xw), make_real(0L, digits)};
    if (near_nonpositive_integer(CReal(x), digits))
        throw PoleError("log_gamma: pole at non-positive integer");
    // Gamma(x) = pi / (sin(pi x) Gamma(1-x)), phase from the sign of sin
    Real s, c;
    sin_cos_pi(xw, s, c);
    Real lg = log(pi_at(work)) - log(abs(s)) - lgamma(1 - xw);
    Real phase = s.sign() > 0 ? make_real(0L, digits) : pi_at(digits);
    return {lg, phase};
}

LogComplex log_gamma(const CReal& z, int digits) {
    if (z.is_real()) return log_gamma_real(z.re, digits);
    if (near_nonpositive_integer(z, digits))
        throw PoleError("log_gamma: pole at non-positive integer");
    int work = digits + 12;
    CReal zw(z.re, z.im);
    zw.re.precision(work);
    zw.im.precision(work);
    if (z.re >= make_real(0.5, digits))
        return lc_from_clog(log_gamma_stirling(zw, digits));
    // reflection; the phase is meaningful mod 2 pi, which LogComplex stores.
    // sin(pi z) with the real part reduced so the phase stays exact at huge |Re z|
    Real kk = round(zw.re);
    Real r = zw.re - kk;
    Real p = pi_at(work);
    CReal wpl = exp(CReal(-zw.im * p, r * p));
    CReal wmi = exp(CReal(zw.im * p, -r * p));
    CReal spz = (wpl - wmi) / CReal(make_real(0L, work), make_real(2L, work));
    bool odd = !mpfr_integer_p(Real(kk / 2).backend().data());
    if (odd) spz = -spz;
    CReal lg = CReal(log(p)) - log(spz);
    return lc_div(lc_from_clog(lg),
                  log_gamma(CReal(make_real(1L, work)) - zw, digits));
}

LogComplex log_gamma_ratio(const CReal& num, const CReal& den, int digits) {
    bool np = gamma_is_pole(num, digits);
    bool dp = gamma_is_pole(den, digits);
    if (np && dp) throw IndeterminateRatio("log_gamma_ratio: both arguments at poles");
    if (dp) return LogComplex::zero(digits);  // 1/Gamma(pole) = 0
    if (np) {
        LogComplex inf = LogComplex::one(digits);
        mpfr_set_inf(inf.log_mod.backend().data(), +1);
        return inf;
    }
    return lc_div(log_gamma(num, digits), log_gamma(den, digits));
}

}  // namespace charlier
