#include "charlier/zeros.hpp"

#include <algorithm>
#include <cmath>

#include "charlier/exact.hpp"
#include "charlier/special.hpp"
#include "charlier/turning.hpp"

namespace charlier {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

namespace {

// sign of C_n at a real point; the adaptive oracle makes this robust
int oracle_sign(const CharlierParams& params, long n, const Real& x) {
    LogComplex v = eval_recurrence(params, n, CReal(x));
    if (v.is_zero()) return 0;
    SignedLogValue s = lc_to_slv(v, 1e-6);
    return s.sign;
}

struct Bracket {
    Real lo, hi;
    int sign_lo;
};

Real bisect_oracle(const CharlierParams& params, long n, Bracket b, int digits) {
    Real tol_base = make_real("1e-12", digits);
    for (int it = 0; it < 256; ++it) {
        Real width = b.hi - b.lo;
        Real scale = make_real(1L, digits);
        Real ax = abs(b.hi);
        if (ax > 1) scale = ax;
        if (width <= tol_base * scale) break;
        Real mid = (b.lo + b.hi) / 2;
        int sm = oracle_sign(params, n, mid);
        if (sm == 0) return mid;
        if (sm == b.sign_lo)
            b.lo = mid;
        else
            b.hi = mid;
    }
    return (b.lo + b.hi) / 2;
}

std::vector<Bracket> scan_brackets(const CharlierParams& params, long n, double lo,
                                   double hi, double h, int digits) {
    std::vector<Bracket> brs;
    Real step = make_real(h, digits);
    Real x = make_real(lo, digits);
    Real end = make_real(hi, digits);
    int sprev = oracle_sign(params, n, x);
    Real xprev = x;
    while (x < end) {
        x += step;
        if (x > end) x = end;
        int scur = oracle_sign(params, n, x);
        if (scur == 0) {
            // landed exactly on a zero: nudge by a sliver of the step
            Real eps = step / 1024;
            brs.push_back({x - eps, x + eps, oracle_sign(params, n, x - eps)});
        } else if (sprev != 0 && scur != sprev) {
            brs.push_back({xprev, x, sprev});
        }
        sprev = scur;
        xprev = x;
        if (x == end) break;
    }
    return brs;
}

}  // namespace

std::vector<ZeroReport> find_zeros(const CharlierParams& params, long n, double lo,
                                   double hi, ExecMode mode, int workers) {
    if (n < 1 || n > 2000)
        throw DomainError("find_zeros: need 1 <= n <= 2000 (oracle cost)");
    if (!(lo < hi)) throw DomainError("find_zeros: need lo < hi");
    int digits = params.digits();
    double a = to_double(params.a_at(digits));
    double edge = n + 2 * std::sqrt(a * n) +
                  3.0 * std::pow(static_cast<double>(n), 1.0 / 6.0) + 3.0;
    bool full_scan = lo <= 0.0 && hi >= edge;

    std::vector<Bracket> brs;
    double h = 0.25;
    for (int attempt = 0; attempt < 3; ++attempt) {
        brs = scan_brackets(params, n, lo, hi, h, digits);
        if (!full_scan || static_cast<long>(brs.size()) >= n) break;
        h /= 2;  // refinement escalation
    }
    if (full_scan && static_cast<long>(brs.size()) < n)
        throw IncompleteScan("find_zeros: full scan found fewer than n sign changes",
                             static_cast<long>(brs.size()));

    std::vector<Real> roots(brs.size(), make_real(0L, digits));
    for_each_index(brs.size(), mode, workers, [&](std::size_t i) {
        roots[i] = bisect_oracle(params, n, brs[i], digits);
    });

    std::vector<ZeroReport> out(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        out[i].k = static_cast<long>(i) + 1;
        out[i].x_empirical = to_double(roots[i]);
    }
    return out;
}

std::vector<Real> predict_small_zeros(const CharlierParams& params, long n, long k_max) {
    if (k_max < 0 || k_max > n)
        throw DomainError("predict_small_zeros: need 0 <= k_max <= n");
    int digits = params.digits();
    std::vector<Real> out;
    out.reserve(k_max);
    for (long k = 0; k < k_max; ++k) out.push_back(make_real(k, digits));
    return out;
}

std::vector<Real> airy_zeros(long j_max, int digits) {
    std::vector<Real> zs;
    Real x = make_real(0L, digits);
    Real step = make_real(0.05, digits);
    AiryPair p = airy_eval(x, digits);
    int sprev = p.ai.sign();
    while (static_cast<long>(zs.size()) < j_max) {
        Real xn = x - step;
        int scur = airy_eval(xn, digits).ai.sign();
        if (scur != sprev && sprev != 0) {
            Real lo = xn, hi = x;
            int slo = scur;
            for (int it = 0; it < digits * 4; ++it) {
                Real mid = (lo + hi) / 2;
                int sm = airy_eval(mid, digits).ai.sign();
                if (sm == slo)
                    lo = mid;
                else
                    hi = mid;
                if (hi - lo < make_real("1e-25", digits)) break;
            }
            zs.push_back((lo + hi) / 2);
        }
        sprev = scur;
        x = xn;
        if (x < -60) throw Error("airy_zeros: scan ran away");
    }
    return zs;
}

std::vector<Real> predict_edge_zeros(const CharlierParams& params, long n, long j_max) {
    if (n < 1 || j_max < 1) throw DomainError("predict_edge_zeros: need n, j_max >= 1");
    int digits = params.digits();
    Real sa = params.sqrt_a(digits);
    Real rn = make_real(n, digits);
    Real n13 = boost::multiprecision::pow(rn, make_real(1L, digits) / 3);
    Real n16inv = boost::multiprecision::pow(rn, -make_real(1L, digits) / 6);

    auto theta_of = [&](const Real& t) {
        TurningMapRight m = map_right(params, CReal(t));
        return Real(n13 * m.eta.re + n16inv * m.phi.re);
    };

    std::vector<Real> iotas = airy_zeros(j_max, digits);
    std::vector<Real> out;
    for (long j = 0; j < j_max; ++j) {
        // Theta is increasing in t; bracket [t_lo, t_hi] around the root
        Real target = iotas[j];
        Real t_lo = 2 * sa - make_real("1.5", digits) * sa;   // map's trusted reach
        Real t_hi = 2 * sa + make_real("1.5", digits) * sa;
        if (theta_of(t_lo) > target)
            throw DomainError(
                "predict_edge_zeros: eta-equation root escapes the map's validity "
                "range for this j");
        Real lo = t_lo, hi = t_hi;
        for (int it = 0; it < digits * 4; ++it) {
            Real mid = (lo + hi) / 2;
            if (theta_of(mid) < target)
                lo = mid;
            else
                hi = mid;
            if (hi - lo < make_real("1e-20", digits)) break;
        }
        out.push_back(rn + sqrt(rn) * (lo + hi) / 2);
    }
    return out;  // decreasing in j since iota_j decreases
}

std::vector<Real> predict_band_zeros(const CharlierParams& params, long n, double x_lo,
                                     double x_hi) {
    int digits = params.digits();
    Real a = params.a_at(digits);
    Real sa = params.sqrt_a(digits);
    Real rn = make_real(n, digits);
    Real p = pi_at(digits);
    using boost::multiprecision::acos;
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;

    // phase(theta) = 2 sqrt(an)[sin th - th cos th] + a sin th cos th - pi/4,
    // increasing in theta; zeros of cos at odd multiples of pi/2
    auto phase_of = [&](const Real& th) {
        return Real(2 * sqrt(a * rn) * (sin(th) - th * cos(th)) + a * sin(th) * cos(th) -
                    p / 4);
    };
    auto theta_of_x = [&](double x) {
        Real t = (make_real(x, digits) - rn) / sqrt(rn);
        Real c = t / (2 * sa);
        if (c >= 1) return make_real(0L, digits);
        if (c <= -1) return p;
        return acos(c);
    };

    Real th_lo = theta_of_x(x_hi);  // theta decreases in x
    Real th_hi = theta_of_x(x_lo);
    std::vector<Real> out;
    Real ph_lo = phase_of(th_lo), ph_hi = phase_of(th_hi);
    using boost::multiprecision::ceil;
    Real mstart = ceil((ph_lo - p / 2) / p);
    for (Real m = mstart;; m += 1) {
        Real target = p / 2 + m * p;
        if (target > ph_hi) break;
        Real lo = th_lo, hi = th_hi;
        for (int it = 0; it < 200; ++it) {
            Real mid = (lo + hi) / 2;
            if (phase_of(mid) < target)
                lo = mid;
            else
                hi = mid;
            if (hi - lo < make_real("1e-18", digits)) break;
        }
        Real th = (lo + hi) / 2;
        out.push_back(rn + sqrt(rn) * 2 * sa * cos(th));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void attach_predictions(const CharlierParams& params, long n, std::vector<ZeroReport>& zs) {
    if (zs.empty()) return;
    int digits = params.digits();
    double a = to_double(params.a_at(digits));
    double band_lo = n - 2 * std::sqrt(a * n);
    double edge_lo = n + 2 * std::sqrt(a * n) - 5 * std::pow(static_cast<double>(n), 1.0 / 6.0);

    std::vector<Real> edge;
    double x_max = zs.back().x_empirical;
    if (x_max >= edge_lo) {
        for (long j = 1; j <= 64; ++j) {
            try {
                edge = predict_edge_zeros(params, n, j);
            } catch (const DomainError&) {
                break;
            }
            if (to_double(edge.back()) < edge_lo) break;
        }
    }
    std::vector<Real> band;
    if (x_max > band_lo)
        band = predict_band_zeros(params, n, std::max(band_lo, zs.front().x_empirical - 1),
                                  x_max + 1);

    for (auto& z : zs) {
        double x = z.x_empirical;
        if (x < band_lo - 1.0) {
            double pred = std::round(x);
            z.x_predicted = pred;
            z.prediction_source = PredictionSource::corollary_integer;
            z.abs_gap = std::fabs(x - pred);
            continue;
        }
        double best = 0.0, bestd = 1e300;
        PredictionSource src = PredictionSource::band_cosine;
        for (const Real& b : band) {
            double v = to_double(b);
            if (std::fabs(v - x) < bestd) {
                bestd = std::fabs(v - x);
                best = v;
                src = PredictionSource::band_cosine;
            }
        }
        for (const Real& e : edge) {
            double v = to_double(e);
            if (std::fabs(v - x) < bestd) {
                bestd = std::fabs(v - x);
                best = v;
                src = PredictionSource::airy_edge;
            }
        }
        if (bestd < 1e300) {
            z.x_predicted = best;
            z.prediction_source = src;
            z.abs_gap = bestd;
        }
    }
}

}  // namespace charlier
