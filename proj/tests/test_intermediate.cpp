#include <doctest.h>

#include <cmath>
#include <random>

#include "charlier/exact.hpp"
#include "charlier/intermediate.hpp"
#include "charlier/non_oscillatory.hpp"

using namespace charlier;
using boost::multiprecision::abs;

namespace {
CharlierParams params_a(double a) { return CharlierParams::from_double(a); }
}  // namespace

TEST_CASE("sqrt_disc squares back to t^2 - 4a") {
    auto p = params_a(1.0);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 50; ++i) {
        CReal t(make_real(u(rng), 40), make_real(u(rng), 40));
        if (to_double(abs(t.im)) < 1e-3) continue;
        IntermediatePhase ph = intermediate_phase(p, t);
        CReal lhs = ph.sqrt_disc * ph.sqrt_disc;
        CReal rhs = t * t - CReal(make_real(4L, 40));
        CHECK(to_double(charlier::abs(lhs - rhs) / charlier::abs(rhs)) < 1e-35);
    }
}

TEST_CASE("sqrt_disc behaves like t at large |t|") {
    auto p = params_a(1.0);
    CReal t(make_real(1000L, 40), make_real(1L, 40));
    IntermediatePhase ph = intermediate_phase(p, t);
    CHECK(to_double(charlier::abs(ph.sqrt_disc - t) / charlier::abs(t)) < 1e-5);
    CReal tneg(make_real(-1000L, 40), make_real(1L, 40));
    IntermediatePhase phn = intermediate_phase(p, tneg);
    CHECK(to_double(charlier::abs(phn.sqrt_disc - tneg) / charlier::abs(tneg)) < 1e-5);
}

TEST_CASE("branch continuity on a circle outside the cut") {
    // walk |t| = 3 sqrt a in 720 steps; no jump beyond step-proportional size
    auto p = params_a(1.0);
    int steps = 720;
    CReal prev;
    bool has_prev = false;
    double max_jump = 0;
    for (int k = 0; k <= steps; ++k) {
        double th = 2 * 3.14159265358979323846 * k / steps;
        CReal t(make_real(3 * std::cos(th), 40), make_real(3 * std::sin(th), 40));
        if (t.im.is_zero() && t.re < 0) continue;  // the cut itself
        CReal sd = sqrt_disc_branch(t, p.sqrt_a(40));
        if (has_prev)
            max_jump = std::max(max_jump, to_double(charlier::abs(sd - prev)));
        prev = sd;
        has_prev = true;
    }
    CHECK(max_jump < 3 * 2 * 3.15 / steps * 2.0);
}

TEST_CASE("intermediate formula: real positive right of the band, O(n^-1/2) decay") {
    auto p = params_a(1.0);
    SUBCASE("real t > 2 sqrt a is real positive") {
        ApproxResult r = intermediate_formula(p, 256, CReal(make_real(4L, 40)));
        CHECK(to_double(abs(r.value.phase)) < 1e-25);
        CHECK(r.error_order == ErrorOrder::one_over_sqrt_n);
    }
    SUBCASE("error size and halving from n to 4n") {
        double errs[2];
        int i = 0;
        for (long n : {1024L, 4096L}) {
            Real x = make_real(n, 50) + boost::multiprecision::sqrt(make_real(n, 50)) * 4;
            LogComplex oracle = eval_recurrence(p, n, CReal(x));
            errs[i++] = lc_rel_diff(intermediate_formula(p, n, CReal(make_real(4L, 50))).value,
                                    oracle);
        }
        CHECK(errs[0] < 0.2);  // measured 4.37/sqrt(1024) = 0.137
        double ratio = errs[0] / errs[1];
        CHECK(ratio > 1.8);
        CHECK(ratio < 2.2);
    }
}

TEST_CASE("intermediate formula rejects the cut") {
    auto p = params_a(1.0);
    CHECK_THROWS_AS(intermediate_formula(p, 100, CReal(make_real(2L, 40))), BranchError);
    CHECK_THROWS_AS(intermediate_formula(p, 100, CReal(make_real(-5L, 40))), BranchError);
}

TEST_CASE("matching with the outer formula in the transition window") {
    // |t| = n^{0.2} at n = 10^4 sits inside n^{1/6} << |t| << n^{1/4};
    // the forms agree within the larger error tag n^{-1/2}
    auto p = params_a(1.0);
    long n = 10000;
    double tv = std::pow(n, 0.2);
    Real t = make_real(tv, 50);
    Real y = 1 + t / boost::multiprecision::sqrt(make_real(n, 50));
    double d = lc_rel_diff(intermediate_formula(p, n, CReal(t)).value,
                           outer_formula(p, n, CReal(y)).value);
    CHECK(d < 0.01);  // measured 0.0052
}

TEST_CASE("band cosine formula: structural zero and coverage at theta, pi - theta") {
    auto p = params_a(1.0);
    long n = 1024;
    int digits = 40;
    Real pi = pi_at(digits);

    SUBCASE("predicted zero of the cosine is a deep zero of the formula") {
        // bisect the phase to an odd multiple of pi/2 between theta = 1.2 and 1.3
        Real a = make_real(1L, digits);
        Real rn = make_real(n, digits);
        auto phase = [&](const Real& th) {
            using boost::multiprecision::cos;
            using boost::multiprecision::sin;
            return Real(2 * boost::multiprecision::sqrt(a * rn) * (sin(th) - th * cos(th)) +
                        a * sin(th) * cos(th) - pi / 4);
        };
        Real lo = make_real(1.2, digits), hi = make_real(1.3, digits);
        Real target = boost::multiprecision::ceil((phase(lo) - pi / 2) / pi) * pi + pi / 2;
        if (target < phase(lo)) target += pi;
        REQUIRE(target < phase(hi));
        for (int it = 0; it < 200; ++it) {
            Real mid = (lo + hi) / 2;
            if (phase(mid) < target)
                lo = mid;
            else
                hi = mid;
        }
        Real th_star = (lo + hi) / 2;
        ApproxResult at_zero = band_cosine_formula(p, n, th_star);
        ApproxResult nearby = band_cosine_formula(p, n, th_star + make_real(0.3, digits));
        // the cosine factor collapses by ~55 digits at the bisected phase
        CHECK(to_double(at_zero.value.log_mod - nearby.value.log_mod) < -100.0);
    }

    SUBCASE("theta and pi - theta both evaluate (signs of t)") {
        ApproxResult r1 = band_cosine_formula(p, n, make_real(1.0, digits));
        ApproxResult r2 = band_cosine_formula(p, n, pi - make_real(1.0, digits));
        CHECK(is_finite(r1.value.log_mod));
        CHECK(is_finite(r2.value.log_mod));
    }

    SUBCASE("domain error outside (0, pi)") {
        CHECK_THROWS_AS(band_cosine_formula(p, n, make_real(0L, digits)), DomainError);
        CHECK_THROWS_AS(band_cosine_formula(p, n, pi), DomainError);
    }
}

TEST_CASE("band cosine matches the oracle where the cosine is not small") {
    auto p = params_a(1.0);
    long n = 4096;
    int digits = 50;
    Real rn = make_real(n, digits);
    // pick x near the band center with |cos(phase)| >= 0.5, scanning fractional offsets
    int good = 0;
    for (int j = 0; j < 12 && good < 4; ++j) {
        Real x = rn + make_real(j, digits) + make_real(0.37, digits);
        Real t = (x - rn) / boost::multiprecision::sqrt(rn);
        Real c = t / 2;
        Real th = boost::multiprecision::acos(c);
        ApproxResult r = band_cosine_formula(p, n, th);
        LogComplex oracle = eval_recurrence(p, n, CReal(x));
        // envelope = formula with the cosine replaced by 1
        Real lenv = intermediate_prefactor_log(p, n, digits) +
                    boost::multiprecision::log(make_real(2L, digits)) -
                    boost::multiprecision::log(4 - t * t) / 4;
        LogComplex env = lc_mul(lc_from_polar_of_log(lenv, make_real(0L, digits)),
                                inv_sqrt_weight(p, CReal(x), digits));
        double cos_frac = std::pow(10.0, lc_log10_mod(r.value) - lc_log10_mod(env));
        if (cos_frac < 0.5) continue;
        ++good;
        double err = lc_rel_diff(r.value, oracle);
        CHECK(err < 0.5 / std::sqrt(double(n)));  // measured ~0.07/sqrt(n)
    }
    CHECK(good >= 3);
}
