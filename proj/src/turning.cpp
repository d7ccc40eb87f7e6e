#include "charlier/turning.hpp"

#include <cmath>

#include "charlier/intermediate.hpp"
#include "charlier/special.hpp"

namespace charlier {

using boost::multiprecision::abs;
using boost::multiprecision::acos;
using boost::multiprecision::cos;
using boost::multiprecision::exp;
using boost::multiprecision::lgamma;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

namespace {

using Series = std::vector<Real>;

// power of a series with unit constant term, h = f^alpha (Miller recurrence)
Series series_pow(const Series& f, const Real& alpha, int digits) {
    size_t m = f.size();
    Series h(m, make_real(0L, digits));
    h[0] = make_real(1L, digits);
    for (size_t k = 1; k < m; ++k) {
        Real acc = make_real(0L, digits);
        for (size_t j = 1; j <= k; ++j)
            acc += (alpha * make_real(static_cast<long>(j), digits) +
                    make_real(static_cast<long>(j), digits) -
                    make_real(static_cast<long>(k), digits)) *
                   f[j] * h[k - j];
        h[k] = acc / make_real(static_cast<long>(k), digits);
    }
    return h;
}

Series series_mul(const Series& f, const Series& g, int digits) {
    size_t m = f.size();
    Series h(m, make_real(0L, digits));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; i + j < m; ++j) h[i + j] += f[i] * g[j];
    return h;
}

template <class T>
T series_eval(const Series& c, const T& tau) {
    T acc(c.back());
    for (size_t k = c.size() - 1; k-- > 0;) acc = acc * tau + T(c[k]);
    return acc;
}

// continued argument of (3/2)G so that eta = ((3/2)G)^{2/3} is the branch
// positive for real t > 2 sqrt a and analytic off (-inf, -2 sqrt a]
CReal eta_from_g(const CReal& g32, bool upper_half, int digits) {
    Real mod = charlier::abs(g32);
    Real ph = arg(g32);
    Real p = pi_at(digits);
    if (upper_half && ph.sign() < 0) ph += 2 * p;
    if (!upper_half && ph.sign() > 0) ph -= 2 * p;
    Real two_thirds = make_real(2L, digits) / 3;
    return exp(CReal(two_thirds * log(mod), two_thirds * ph));
}

}  // namespace

std::shared_ptr<const TurningSeries> build_turning_series(const Real& a, int digits) {
    int work = digits + 15;
    Real aw = a;
    aw.precision(work);
    Real sa = sqrt(aw);
    size_t ord = kTurningSeriesOrder + 1;

    // arccosh(1+u) = sqrt(2u) sum c_k u^k, c_k = binom(-1/2, k)/(2^{k+1}(k+1/2));
    // with u = tau/(2 sqrt a):  G'(t0+tau) = sqrt(tau/sqrt a) * P(tau),
    // P_k = c_k (2 sqrt a)^{-k}; then (3/2) G tau^{-3/2} a^{1/4} =: Q with
    // Q_k = (3/2) P_k / (k + 3/2).
    Series q(ord, make_real(0L, work));
    Real binom = make_real(1L, work);  // binom(-1/2, k)
    Real half = make_real(0.5, work);
    for (size_t k = 0; k < ord; ++k) {
        if (k > 0)
            binom *= (-half - make_real(static_cast<long>(k - 1), work)) /
                     make_real(static_cast<long>(k), work);
        Real ck = binom / (pow(make_real(2L, work), static_cast<int>(k + 1)) *
                           (make_real(static_cast<long>(k), work) + half));
        Real pk = ck / pow(2 * sa, static_cast<int>(k));
        q[k] = make_real("1.5", work) * pk /
               (make_real(static_cast<long>(k), work) + make_real("1.5", work));
    }

    auto ts = std::make_shared<TurningSeries>();
    ts->digits = digits;
    ts->sqrt_a = sa;
    ts->switch_radius = make_real(0.25, work) * sa;

    // eta = a^{-1/6} tau Q^{2/3}
    Real sixth = make_real(1L, work) / 6;
    Series q23 = series_pow(q, make_real(2L, work) / 3, work);
    ts->eta.assign(ord + 1, make_real(0L, work));
    for (size_t k = 0; k < ord; ++k) ts->eta[k + 1] = pow(aw, -sixth) * q23[k];

    // Phi = -a^{1/12} (t0 + tau) sqrt(tau + 4 sqrt a) / (4 Q^{1/3})
    //     = -a^{1/12} (t0 + tau) 2 a^{1/4} (1 + tau/(4 sqrt a))^{1/2} / (4 Q^{1/3})
    Series lin(ord, make_real(0L, work));
    lin[0] = make_real(1L, work);
    if (ord > 1) lin[1] = make_real(1L, work) / (4 * sa);
    Series root = series_pow(lin, half, work);
    Series qm13 = series_pow(q, make_real(-1L, work) / 3, work);
    Series num = series_mul(root, qm13, work);
    Series t0p(ord, make_real(0L, work));
    t0p[0] = 2 * sa;
    if (ord > 1) t0p[1] = make_real(1L, work);
    Series phi_ser = series_mul(t0p, num, work);
    Real phi_pref = -pow(aw, make_real(1L, work) / 12) * 2 * pow(aw, make_real(0.25, work)) /
                    make_real(4L, work);
    ts->phi.assign(ord, make_real(0L, work));
    for (size_t k = 0; k < ord; ++k) ts->phi[k] = phi_pref * phi_ser[k];

    // A0 = a^{1/12} [Q^{2/3} (1 + tau/(4 sqrt a))^{-1}]^{1/4}
    Series geom = series_pow(lin, make_real(-1L, work), work);
    Series inner = series_mul(q23, geom, work);
    Series a0_ser = series_pow(inner, make_real(0.25, work), work);
    ts->a0.assign(ord, make_real(0L, work));
    for (size_t k = 0; k < ord; ++k)
        ts->a0[k] = pow(aw, make_real(1L, work) / 12) * a0_ser[k];
    return ts;
}

namespace {

// direct closed-form map for real t > 2 sqrt a
TurningMapRight map_direct_real_right(const Real& a, const Real& sa, const Real& t,
                                      int digits) {
    Real sd = sqrt(t - 2 * sa) * sqrt(t + 2 * sa);
    Real g = t * log((t + sd) / (2 * sa)) - sd;
    Real eta = pow(make_real("1.5", digits) * g, make_real(2L, digits) / 3);
    Real phi = -t * sd / (4 * sqrt(eta));
    Real a0 = pow(4 * a * eta / (t * t - 4 * a), make_real(0.25, digits));
    return {CReal(eta), CReal(phi), CReal(a0), CReal(t)};
}

// direct map on the open band via the theta parameterization (from-above limit)
TurningMapRight map_direct_band(const Real& a, const Real& sa, const Real& t, int digits) {
    Real th = acos(t / (2 * sa));
    Real mu = 2 * sa * (sin(th) - th * cos(th));  // (2/3)(-eta)^{3/2}
    Real neg_eta = pow(make_real("1.5", digits) * mu, make_real(2L, digits) / 3);
    Real eta = -neg_eta;
    Real phi = -t * sqrt(4 * a - t * t) / (4 * sqrt(neg_eta));
    Real a0 = pow(4 * a * neg_eta / (4 * a - t * t), make_real(0.25, digits));
    return {CReal(eta), CReal(phi), CReal(a0), CReal(t)};
}

// general complex t off the real line
TurningMapRight map_direct_complex(const Real& a, const Real& sa, const CReal& t,
                                   int digits) {
    CReal sd = sqrt_disc_branch(t, sa);
    CReal g = t * log((t + sd) / CReal(2 * sa)) - sd;
    bool upper = t.im.sign() > 0;
    CReal eta = eta_from_g(g * make_real("1.5", digits), upper, digits);
    CReal phi = -t * sd / (sqrt(eta) * make_real(4L, digits));
    // A0 as the principal fourth root of 4 a eta/(t^2-4a); stays off the
    // negative axis in the map's working neighborhood
    CReal ratio = CReal(4 * a) * eta / ((t - CReal(2 * sa)) * (t + CReal(2 * sa)));
    CReal a0 = exp(log(ratio) * make_real(0.25, digits));
    // sqrt(eta) above must follow the continued branch of eta; principal sqrt
    // of the continued value agrees because |arg eta| < pi here
    return {eta, phi, a0, t};
}

TurningMapRight map_series(const TurningSeries& ts, const CReal& tau, int digits) {
    CReal eta = series_eval<CReal>(ts.eta, tau);
    CReal phi = series_eval<CReal>(ts.phi, tau);
    CReal a0 = series_eval<CReal>(ts.a0, tau);
    eta.re.precision(digits);
    eta.im.precision(digits);
    phi.re.precision(digits);
    phi.im.precision(digits);
    a0.re.precision(digits);
    a0.im.precision(digits);
    return {eta, phi, a0, tau + CReal(2 * ts.sqrt_a)};
}

}  // namespace

TurningMapRight map_right(const CharlierParams& params, const CReal& t) {
    int digits = params.digits();
    Real a = params.a_at(digits);
    Real sa = params.sqrt_a(digits);
    CReal tw(t.re, t.im);
    tw.re.precision(digits);
    tw.im.precision(digits);
    if (tw.im.is_zero() && tw.re <= -2 * sa)
        throw BranchError("map_right: t on the cut (-inf, -2 sqrt a]");
    const TurningSeries& ts = params.turning_series();
    CReal tau = tw - CReal(2 * sa);
    if (charlier::abs(tau) <= ts.switch_radius) return map_series(ts, tau, digits);
    if (tw.im.is_zero()) {
        if (tw.re > 2 * sa) return map_direct_real_right(a, sa, tw.re, digits);
        return map_direct_band(a, sa, tw.re, digits);
    }
    return map_direct_complex(a, sa, tw, digits);
}

TurningMapLeft map_left(const CharlierParams& params, const CReal& t) {
    int digits = params.digits();
    Real sa = params.sqrt_a(digits);
    CReal tw(t.re, t.im);
    tw.re.precision(digits);
    tw.im.precision(digits);
    if (tw.im.is_zero() && tw.re >= 2 * sa)
        throw BranchError("map_left: t on the excluded ray [2 sqrt a, inf)");
    TurningMapRight m = map_right(params, -tw);
    return {m.eta, -m.phi, m.a0, tw};
}

Real left_validity_radius(const CharlierParams& params, int digits) {
    return make_real(0.75, digits) * params.sqrt_a(digits);
}

Real turning_prefactor_log(const CharlierParams& params, long n, int digits) {
    Real a = params.a_at(digits);
    Real rn = make_real(n, digits);
    // Gamma(1/2) = sqrt(pi) folds with (pi/(2a))^{1/4}
    return rn / 2 * log(2 * a) + lgamma((rn + 1) / 2) - log(pi_at(digits)) / 4 -
           log(2 * a) / 4 + a / 2;
}

namespace {

struct LeftPieces {
    Real x;
    CReal theta;    // n^{1/3}(eta~ + Phi~/sqrt n)
    LogComplex amp; // C_{KK,n} x^{1/12} A0~ / sqrt(w(x)) including (-1)^n
};

LeftPieces left_pieces(const CharlierParams& params, long n, const CReal& t, int digits) {
    Real rn = make_real(n, digits);
    CReal x = CReal(rn) + t * sqrt(rn);
    TurningMapLeft m = map_left(params, t);
    CReal theta = (m.eta_tilde + m.phi_tilde / sqrt(rn)) * pow(rn, make_real(1L, digits) / 3);
    LogComplex amp = lc_from_polar_of_log(
        turning_prefactor_log(params, n, digits),
        (n % 2 == 0) ? make_real(0L, digits) : pi_at(digits));
    amp = lc_mul(amp, lc_from_clog(log(x) / make_real(12L, digits)));
    amp = lc_mul(amp, lc_from_creal(m.a0_tilde));
    amp = lc_mul(amp, inv_sqrt_weight(params, x, digits));
    return {x.re, theta, amp};
}

}  // namespace

ApproxResult airy_formula_right(const CharlierParams& params, long n, const CReal& t) {
    int digits = params.digits();
    Real rn = make_real(n, digits);
    CReal tw(t.re, t.im);
    tw.re.precision(digits);
    tw.im.precision(digits);
    TurningMapRight m = map_right(params, tw);
    CReal x = CReal(rn) + tw * sqrt(rn);
    CReal arg_airy =
        m.eta * pow(rn, make_real(1L, digits) / 3) + m.phi * pow(rn, -make_real(1L, digits) / 6);

    LogComplex ai;
    if (arg_airy.is_real() && m.t.is_real()) {
        AiryPair p = airy_eval(arg_airy.re, digits);
        ai = lc_from_real(p.ai);
    } else {
        ai = lc_from_creal(airy_ai_complex(arg_airy, digits));
    }
    if (ai.is_zero())
        return {ai, FormulaTag::turn_right, ErrorOrder::airy_uniform};

    LogComplex v = lc_from_polar_of_log(turning_prefactor_log(params, n, digits),
                                        make_real(0L, digits));
    v = lc_mul(v, lc_from_clog(log(x) / make_real(12L, digits)));
    v = lc_mul(v, inv_sqrt_weight(params, x, digits));
    v = lc_mul(v, lc_from_creal(m.a0));
    v = lc_mul(v, ai);
    return {v, FormulaTag::turn_right, ErrorOrder::airy_uniform};
}

ApproxResult airy_formula_left(const CharlierParams& params, long n, const Real& t,
                               LeftRadiusPolicy radius) {
    int digits = params.digits();
    Real sa = params.sqrt_a(digits);
    Real tw = t;
    tw.precision(digits);
    if (radius == LeftRadiusPolicy::enforce &&
        abs(tw + 2 * sa) > left_validity_radius(params, digits))
        throw OutOfNeighborhood(
            "airy_formula_left: |t + 2 sqrt a| exceeds the validity radius; "
            "use the band or interior formulas");
    LeftPieces pc = left_pieces(params, n, CReal(tw), digits);
    Real sx, cx;
    sin_cos_pi(pc.x, sx, cx);
    AiryPair p = airy_eval(pc.theta.re, digits);
    Real bracket = cx * p.ai - sx * p.bi;
    if (bracket.is_zero())
        return {LogComplex::zero(digits), FormulaTag::turn_left, ErrorOrder::airy_uniform};
    LogComplex v = lc_mul(pc.amp, lc_from_real(bracket));
    return {v, FormulaTag::turn_left, ErrorOrder::airy_uniform};
}

ApproxResult airy_formula_left_complex(const CharlierParams& params, long n, const CReal& t) {
    int digits = params.digits();
    Real sa = params.sqrt_a(digits);
    CReal tw(t.re, t.im);
    tw.re.precision(digits);
    tw.im.precision(digits);
    CReal dt = tw + CReal(2 * sa);
    Real gap = pow(charlier::abs(dt), make_real("1.5", digits));
    if (abs(tw.im) <= gap)
        throw AmbiguousDominance(
            "airy_formula_left_complex: Im(t + 2 sqrt a) does not dominate "
            "|t + 2 sqrt a|^{3/2}; use the real-form operation or the full "
            "two-term combination");
    if (tw.im.sign() < 0) {
        ApproxResult r = airy_formula_left_complex(params, n, conj(tw));
        r.value = r.value.conjugated();
        return r;
    }
    LeftPieces pc = left_pieces(params, n, tw, digits);
    Real p = pi_at(digits);
    // e^{-(x pi + pi/3) i}; reduce the real part of x mod 2 before the phase
    CReal x = CReal(make_real(n, digits)) + tw * sqrt(make_real(n, digits));
    Real k2 = 2 * boost::multiprecision::round(x.re / 2);
    CReal xr(x.re - k2, x.im);
    LogComplex phase = lc_from_clog(CReal(xr.im * p, -(xr.re * p + p / 3)));
    CReal omega = exp(CReal(make_real(0L, digits), 2 * p / 3));
    CReal ai = airy_ai_complex(omega * pc.theta, digits);
    LogComplex v = lc_mul(pc.amp, lc_mul(phase, lc_from_creal(ai)));
    return {v, FormulaTag::turn_left, ErrorOrder::airy_uniform};
}

ApproxResult airy_formula_left_two_term(const CharlierParams& params, long n, const CReal& t) {
    int digits = params.digits();
    CReal tw(t.re, t.im);
    tw.re.precision(digits);
    tw.im.precision(digits);
    if (tw.is_real()) return airy_formula_left(params, n, tw.re, LeftRadiusPolicy::relaxed);
    LeftPieces pc = left_pieces(params, n, tw, digits);
    Real p = pi_at(digits);
    CReal x = CReal(make_real(n, digits)) + tw * sqrt(make_real(n, digits));
    Real k2 = 2 * boost::multiprecision::round(x.re / 2);
    CReal xr(x.re - k2, x.im);
    CReal omega = exp(CReal(make_real(0L, digits), 2 * p / 3));
    CReal omega2 = exp(CReal(make_real(0L, digits), -2 * p / 3));
    CReal ph_minus = exp(CReal(xr.im * p, -(xr.re * p + p / 3)));
    CReal ph_plus = exp(CReal(-xr.im * p, xr.re * p + p / 3));
    CReal bracket = ph_minus * airy_ai_complex(omega * pc.theta, digits) +
                    ph_plus * airy_ai_complex(omega2 * pc.theta, digits);
    LogComplex v = lc_mul(pc.amp, lc_from_creal(bracket));
    return {v, FormulaTag::turn_left, ErrorOrder::airy_uniform};
}

}  // namespace charlier
