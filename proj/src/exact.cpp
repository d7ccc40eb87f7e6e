#include "charlier/exact.hpp"

#include <cmath>

namespace charlier {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;

namespace {

// one pass of the forward recurrence at a fixed precision
LogComplex recurrence_once_real(const Real& a, long n, const Real& x, int digits) {
    Real aw = a;
    aw.precision(digits);
    Real xw = x;
    xw.precision(digits);
    SignedLogValue prev = SignedLogValue::zero(digits);                 // C_{-1}
    SignedLogValue cur = SignedLogValue::from_real(make_real(1L, digits));  // C_0
    for (long k = 0; k < n; ++k) {
        SignedLogValue f = SignedLogValue::from_real(xw - make_real(k, digits) - aw);
        SignedLogValue b = SignedLogValue::from_real(aw * make_real(k, digits));
        SignedLogValue next = slv_sub(slv_mul(f, cur), slv_mul(b, prev));
        prev = cur;
        cur = next;
    }
    return lc_from_slv(cur);
}

LogComplex recurrence_once_complex(const Real& a, long n, const CReal& x, int digits) {
    Real aw = a;
    aw.precision(digits);
    CReal xw(x.re, x.im);
    xw.re.precision(digits);
    xw.im.precision(digits);
    LogComplex prev = LogComplex::zero(digits);
    LogComplex cur = LogComplex::one(digits);
    for (long k = 0; k < n; ++k) {
        LogComplex f = lc_from_creal(xw - CReal(make_real(k, digits) + aw));
        LogComplex b = lc_from_real(aw * make_real(k, digits));
        LogComplex next = lc_sub(lc_mul(f, cur), lc_mul(b, prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

LogComplex sum_once(const Real& a, long n, const CReal& x, int digits) {
    Real aw = a;
    aw.precision(digits);
    CReal xw(x.re, x.im);
    xw.re.precision(digits);
    xw.im.precision(digits);
    // (-a)^{n-k} built down from (-a)^n; binomials as running products
    CReal total(make_real(0L, digits));
    Real bin_nk = make_real(1L, digits);       // binom(n, k)
    CReal bin_xk(make_real(1L, digits));       // binom(x, k)
    Real kfac = make_real(1L, digits);         // k!
    Real neg_a_pow = pow(Real(-aw), static_cast<int>(n));
    for (long k = 0; k <= n; ++k) {
        if (k > 0) {
            bin_nk = bin_nk * make_real(n - k + 1, digits) / make_real(k, digits);
            bin_xk = bin_xk * (xw - CReal(make_real(k - 1, digits))) / make_real(k, digits);
            kfac = kfac * make_real(k, digits);
            neg_a_pow = neg_a_pow / (-aw);
        }
        total = total + bin_xk * (bin_nk * kfac * neg_a_pow);
    }
    return lc_from_creal(total);
}

// adaptive two-level escalation driver
template <class F>
LogComplex stabilize(const PrecisionPolicy& policy, F&& eval_at) {
    int bits = std::max(64, policy.working_bits);
    LogComplex prev = eval_at(digits_for_bits(bits));
    while (2 * bits <= policy.max_bits) {
        bits *= 2;
        LogComplex cur = eval_at(digits_for_bits(bits));
        double d = lc_rel_diff(prev, cur);
        if (d <= policy.target_rel_err) return cur;
        prev = cur;
    }
    throw PrecisionExhausted("evaluation did not stabilize within the precision cap");
}

}  // namespace

LogComplex eval_recurrence(const CharlierParams& params, long n, const CReal& x) {
    if (n < 0) throw DomainError("eval_recurrence: n must be non-negative");
    if (n == 0) return LogComplex::one(params.digits());
    if (x.is_real())
        return stabilize(params.precision(), [&](int d) {
            return recurrence_once_real(params.a(), n, x.re, d);
        });
    return stabilize(params.precision(), [&](int d) {
        return recurrence_once_complex(params.a(), n, x, d);
    });
}

LogComplex eval_explicit_sum(const CharlierParams& params, long n, const CReal& x,
                             long sum_cap) {
    if (n < 0) throw DomainError("eval_explicit_sum: n must be non-negative");
    if (n > sum_cap)
        throw CapabilityError(
            "eval_explicit_sum: n exceeds sum_cap; use eval_recurrence");
    return stabilize(params.precision(),
                     [&](int d) { return sum_once(params.a(), n, x, d); });
}

Real orthogonality_check(const CharlierParams& params, long n, long m, long k_max) {
    if (n < 0 || m < 0 || n > 30 || m > 30)
        throw DomainError("orthogonality_check: need 0 <= n, m <= 30");
    int digits = params.digits();
    Real a = params.a_at(digits);

    // polynomial values at integer nodes via one recurrence pass per node
    auto poly_at = [&](long deg, long node) {
        Real x = make_real(node, digits);
        Real prev = make_real(0L, digits), cur = make_real(1L, digits);
        for (long k = 0; k < deg; ++k) {
            Real next = (x - make_real(k, digits) - a) * cur - a * make_real(k, digits) * prev;
            prev = cur;
            cur = next;
        }
        return cur;
    };

    Real sum = make_real(0L, digits);
    Real weight = make_real(1L, digits);  // a^k / k!
    Real last_term_bound = make_real(0L, digits);
    for (long k = 0; k <= k_max; ++k) {
        if (k > 0) weight = weight * a / make_real(k, digits);
        Real term = poly_at(n, k) * poly_at(m, k) * weight;
        sum += term;
        last_term_bound = abs(term);
    }
    // e^a a^n n!
    Real scale = exp(a) * pow(a, static_cast<int>(n));
    for (long k = 2; k <= n; ++k) scale *= make_real(k, digits);

    // tail admissibility: beyond k_max the term ratio must be < 1/2 and the
    // geometric tail below 1e-30 of the scale
    double ratio = to_double(a) / (k_max + 1) *
                   std::pow(1.0 + 1.0 / k_max, static_cast<double>(n + m));
    Real tail = 2 * last_term_bound * a / make_real(k_max + 1, digits);
    if (ratio >= 0.5 || tail > scale * make_real(1e-30, digits)) {
        long suggestion = k_max * 2 + 64;
        throw TailInsufficient("orthogonality_check: k_max tail bound not met", suggestion);
    }

    Real expected = (n == m) ? scale : make_real(0L, digits);
    return abs(sum - expected) / scale;
}

}  // namespace charlier
