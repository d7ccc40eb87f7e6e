#include "charlier/intermediate.hpp"

#include "charlier/special.hpp"

namespace charlier {

using boost::multiprecision::abs;
using boost::multiprecision::acos;
using boost::multiprecision::cos;
using boost::multiprecision::lgamma;
using boost::multiprecision::log;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

CReal sqrt_disc_branch(const CReal& t, const Real& sqrt_a) {
    return sqrt(t - CReal(2 * sqrt_a)) * sqrt(t + CReal(2 * sqrt_a));
}

CReal log_disc_branch(const CReal& t, const Real& sqrt_a) {
    return log(t - CReal(2 * sqrt_a)) + log(t + CReal(2 * sqrt_a));
}

namespace {

// dist(t, (-inf, 2 sqrt a]) == 0 detection
bool on_left_cut(const CReal& t, const Real& sqrt_a) {
    return t.im.is_zero() && t.re <= 2 * sqrt_a;
}

}  // namespace

IntermediatePhase intermediate_phase(const CharlierParams& params, const CReal& t) {
    int digits = params.digits();
    Real sa = params.sqrt_a(digits);
    CReal tw(t.re, t.im);
    tw.re.precision(digits);
    tw.im.precision(digits);
    IntermediatePhase ph;
    ph.t = tw;
    ph.sqrt_disc = sqrt_disc_branch(tw, sa);
    ph.log_factor = log((tw - ph.sqrt_disc) / CReal(2 * sa));
    return ph;
}

Real intermediate_prefactor_log(const CharlierParams& params, long n, int digits) {
    Real a = params.a_at(digits);
    Real rn = make_real(n, digits);
    Real two = make_real(2L, digits);
    // log[(2a)^{n/2} Gamma((n+1)/2)/Gamma(1/2) 2^{-3/4} pi^{-1/4} e^{a/2}]
    // with Gamma(1/2) = sqrt(pi): the pi exponent folds to -3/4
    return rn / 2 * log(2 * a) + lgamma((rn + 1) / 2) -
           make_real(3L, digits) * log(two) / 4 -
           make_real(3L, digits) * log(pi_at(digits)) / 4 + a / 2;
}

LogComplex inv_sqrt_weight(const CharlierParams& params, const CReal& x, int digits) {
    Real a = params.a_at(digits);
    CReal xw(x.re, x.im);
    xw.re.precision(digits);
    xw.im.precision(digits);
    LogComplex g = log_gamma(xw + CReal(make_real(1L, digits)), digits);
    LogComplex a_pow_x = lc_from_clog(xw * log(a));
    return lc_pow(lc_div(g, a_pow_x), make_real(0.5, digits));
}

ApproxResult intermediate_formula(const CharlierParams& params, long n, const CReal& t) {
    int digits = params.digits();
    Real a = params.a_at(digits);
    Real sa = params.sqrt_a(digits);
    CReal tw(t.re, t.im);
    tw.re.precision(digits);
    tw.im.precision(digits);
    if (on_left_cut(tw, sa))
        throw BranchError("intermediate_formula: t on the cut (-inf, 2 sqrt a]");
    Real rn = make_real(n, digits);
    CReal x = CReal(rn) + tw * sqrt(rn);

    IntermediatePhase ph = intermediate_phase(params, tw);
    CReal expo = (tw * ph.log_factor + ph.sqrt_disc) * sqrt(rn) -
                 log_disc_branch(tw, sa) / make_real(4L, digits) +
                 tw * ph.sqrt_disc / make_real(4L, digits);

    LogComplex value = lc_mul(
        lc_from_polar_of_log(intermediate_prefactor_log(params, n, digits),
                             make_real(0L, digits)),
        lc_mul(inv_sqrt_weight(params, x, digits), lc_from_clog(expo)));
    return {value, FormulaTag::intermediate, ErrorOrder::one_over_sqrt_n};
}

ApproxResult band_cosine_formula(const CharlierParams& params, long n, const Real& theta) {
    int digits = params.digits();
    Real a = params.a_at(digits);
    Real sa = params.sqrt_a(digits);
    Real th = theta;
    th.precision(digits);
    Real p = pi_at(digits);
    if (!(th > 0 && th < p))
        throw DomainError("band_cosine_formula: theta must lie in (0, pi)");
    Real rn = make_real(n, digits);
    Real t = 2 * sa * cos(th);
    Real x = rn + sqrt(rn) * t;

    Real phase = 2 * sqrt(a * rn) * (sin(th) - th * cos(th)) + a * sin(th) * cos(th) - p / 4;
    // reduce mod 2 pi before cos
    Real red(0);
    red.precision(digits);
    Real two_pi = 2 * p;
    mpfr_remainder(red.backend().data(), phase.backend().data(), two_pi.backend().data(),
                   MPFR_RNDN);
    Real c = cos(red);
    if (c.is_zero())
        return {LogComplex::zero(digits), FormulaTag::band, ErrorOrder::one_over_sqrt_n};

    Real log_mag = intermediate_prefactor_log(params, n, digits) + log(make_real(2L, digits)) -
                   log(4 * a - t * t) / 4 + log(abs(c));
    SignedLogValue mag = SignedLogValue::from_log(c.sign(), log_mag);
    LogComplex value = lc_mul(lc_from_slv(mag), inv_sqrt_weight(params, CReal(x), digits));
    return {value, FormulaTag::band, ErrorOrder::one_over_sqrt_n};
}

}  // namespace charlier
