#include "charlier/non_oscillatory.hpp"

#include "charlier/special.hpp"

namespace charlier {

using boost::multiprecision::abs;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

WkLadder wk_ladder(const CharlierParams& params, long n, const CReal& x) {
    if (n < 1) throw DomainError("wk_ladder: need n >= 1");
    int digits = params.digits();
    Real a = params.a_at(digits);
    CReal xw(x.re, x.im);
    xw.re.precision(digits);
    xw.im.precision(digits);

    WkLadder out;
    out.w.reserve(n);
    out.delta.reserve(n);
    out.epsilon.reserve(n);

    CReal one(make_real(1L, digits));
    CReal wk = xw - CReal(a);
    LogComplex prod = LogComplex::one(digits);
    for (long k = 1; k <= n; ++k) {
        if (k > 1) {
            if (charlier::abs(out.w.back()).is_zero())
                throw LadderBreakdown("wk_ladder: w_{k-1} vanished");
            wk = xw - CReal(make_real(k - 1, digits) + a) -
                 CReal(a * make_real(k - 1, digits)) / out.w.back();
        }
        if (charlier::abs(wk).is_zero())
            throw LadderBreakdown("wk_ladder: w_k vanished");
        CReal xk = xw - CReal(make_real(k, digits));
        CReal dk = wk / xk - one;
        CReal ek = dk - (CReal(make_real(1L, digits) - a) -
                         CReal(a * make_real(k, digits)) / xk) / xk;
        out.w.push_back(wk);
        out.delta.push_back(dk);
        out.epsilon.push_back(ek);
        prod = lc_mul(prod, lc_from_creal(wk));
    }
    out.log_product = prod;

    // Lemma constants, from the proof's recipe, with r = dist(y, [0,1])
    Real r = dist_to_unit_segment(xw / make_real(n, digits));
    if (r.is_zero()) r = make_real(1e-30, digits);  // constants meaningless on the segment
    out.m0 = abs(1 - a) / r + 3 * a / (r * r) + a / (r * r * r);
    out.m1 = a * (1 + r + 2 * r * out.m0) / (r * r * r);
    out.big_n = 2 * out.m0;
    return out;
}

ApproxResult outer_formula(const CharlierParams& params, long n, const CReal& y) {
    int digits = params.digits();
    Real a = params.a_at(digits);
    CReal yw(y.re, y.im);
    yw.re.precision(digits);
    yw.im.precision(digits);
    if (dist_to_unit_segment(yw).is_zero())
        throw BranchError("outer_formula: y on the branch cut [0, 1]");
    Real rn = make_real(n, digits);
    CReal one(make_real(1L, digits));
    CReal ym1 = yw - one;
    // log value = n log n + (1/2) log(y/(y-1)) - a/(y-1) + n [y log(y/(y-1)) - 1] + n log(y-1)
    CReal ratio_log = log(yw / ym1);
    CReal lv = CReal(rn * log(rn)) + ratio_log / make_real(2L, digits) -
               CReal(a) / ym1 + (yw * ratio_log - one) * rn + log(ym1) * rn;
    return {lc_from_clog(lv), FormulaTag::outer, ErrorOrder::one_over_n};
}

ApproxResult origin_gamma_formula(const CharlierParams& params, long n, const CReal& y) {
    int digits = params.digits();
    Real a = params.a_at(digits);
    CReal yw(y.re, y.im);
    yw.re.precision(digits);
    yw.im.precision(digits);
    CReal one(make_real(1L, digits));
    if (charlier::abs(yw - one).is_zero())
        throw BranchError("origin_gamma_formula: y = 1 is outside Theorem 1's region");
    Real rn = make_real(n, digits);
    CReal x = yw * rn;
    CReal phi0 = exp(CReal(a) / (one - yw));  // e^{a/(1-y)}
    LogComplex pref = lc_from_creal(phi0);

    LogComplex ratio;
    bool near_positive_axis =
        abs(x.im) <= make_real(0.5, digits) && x.re > make_real(-0.5, digits);
    if (near_positive_axis) {
        // (-1)^n Gamma(n-x)/Gamma(-x) = Gamma(x+1)/Gamma(1+x-n)
        ratio = log_gamma_ratio(x + one, x + CReal(make_real(1L - n, digits)), digits);
        if (ratio.is_zero()) return {ratio, FormulaTag::origin, ErrorOrder::one_over_n};
        return {lc_mul(pref, ratio), FormulaTag::origin, ErrorOrder::one_over_n};
    }
    ratio = log_gamma_ratio(CReal(rn) - x, -x, digits);
    if (ratio.is_zero()) return {ratio, FormulaTag::origin, ErrorOrder::one_over_n};
    LogComplex sign_n =
        (n % 2 == 0) ? LogComplex::one(digits)
                     : lc_from_polar_of_log(make_real(0L, digits), pi_at(digits));
    return {lc_mul(sign_n, lc_mul(pref, ratio)), FormulaTag::origin,
            ErrorOrder::one_over_n};
}

ApproxResult interior_oscillatory_formula(const CharlierParams& params, long n,
                                          const Real& y) {
    int digits = params.digits();
    Real a = params.a_at(digits);
    Real yw = y;
    yw.precision(digits);
    if (!(yw > 0 && yw < 1))
        throw DomainError("interior_oscillatory_formula: y must lie in (0, 1)");
    Real rn = make_real(n, digits);
    Real x = rn * yw;
    Real s, c;
    sin_cos_pi(x, s, c);
    if (s.is_zero())
        return {LogComplex::zero(digits), FormulaTag::interior, ErrorOrder::one_over_n};
    Real one_m = 1 - yw;
    Real log_abs = log(make_real(2L, digits)) + rn * log(rn) +
                   log(yw / one_m) / 2 + a / one_m +
                   rn * (yw * log(yw / one_m) - 1) + rn * log(one_m) + log(abs(s));
    // sign of (y-1)^n (-sin(ny pi)) = (-1)^{n+1} sgn sin
    int sign = ((n % 2 == 0) ? -1 : 1) * s.sign();
    return {lc_from_slv(SignedLogValue::from_log(sign, log_abs)), FormulaTag::interior,
            ErrorOrder::one_over_n};
}

}  // namespace charlier
