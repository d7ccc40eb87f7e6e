#include <doctest.h>

#include <random>

#include "charlier/exact.hpp"

using namespace charlier;
using boost::multiprecision::abs;

namespace {

CharlierParams params_a(double a) { return CharlierParams::from_double(a); }

double rel_diff(const LogComplex& u, const LogComplex& v) { return lc_rel_diff(u, v); }

}  // namespace

TEST_CASE("initial data and degree-1 value") {
    auto p = params_a(0.5);
    CHECK(lc_rel_diff(eval_recurrence(p, 0, CReal(make_real("7.3", 40))),
                      LogComplex::one(40)) < 1e-30);
    // C_1 = x - a
    LogComplex c1 = eval_recurrence(p, 1, CReal(make_real("5.2", 40)));
    CHECK(to_double(lc_to_creal(c1).re) == doctest::Approx(4.7).epsilon(1e-14));
    LogComplex s1 = eval_explicit_sum(p, 1, CReal(make_real("5.2", 40)));
    CHECK(rel_diff(c1, s1) < 1e-35);
}

TEST_CASE("hand values: C_2^{(1)}(2) = -1 and C_3^{(2)}(0) = -8") {
    auto p1 = params_a(1.0);
    LogComplex v = eval_recurrence(p1, 2, CReal(make_real(2L, 40)));
    CHECK(to_double(lc_to_creal(v).re) == doctest::Approx(-1.0).epsilon(1e-20));
    LogComplex s = eval_explicit_sum(p1, 2, CReal(make_real(2L, 40)));
    CHECK(rel_diff(v, s) < 1e-35);

    auto p2 = params_a(2.0);
    LogComplex w = eval_explicit_sum(p2, 3, CReal(make_real(0L, 40)));
    CHECK(to_double(lc_to_creal(w).re) == doctest::Approx(-8.0).epsilon(1e-20));
}

TEST_CASE("oracle agreement: recurrence vs explicit sum") {
    // the acceptance suite runs the full grid; spot a representative slice here
    for (double a : {0.5, 2.0}) {
        auto p = params_a(a);
        for (long n : {7L, 23L, 50L}) {
            for (double xr : {-3.0, 0.7, 5.2}) {
                LogComplex r = eval_recurrence(p, n, CReal(make_real(xr, 40)));
                LogComplex s = eval_explicit_sum(p, n, CReal(make_real(xr, 40)));
                CHECK(rel_diff(r, s) < 1e-40);
            }
            LogComplex r = eval_recurrence(p, n, CReal(make_real(3L, 40), make_real(2L, 40)));
            LogComplex s = eval_explicit_sum(p, n, CReal(make_real(3L, 40), make_real(2L, 40)));
            CHECK(rel_diff(r, s) < 1e-40);
        }
    }
}

TEST_CASE("recurrence residual at random points") {
    auto p = params_a(1.0);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> xr(-4.0, 40.0);
    std::uniform_int_distribution<long> nn(2, 60);
    for (int i = 0; i < 12; ++i) {
        long n = nn(rng);
        Real x = make_real(xr(rng), 40);
        LogComplex cm1 = eval_recurrence(p, n - 1, CReal(x));
        LogComplex c0 = eval_recurrence(p, n, CReal(x));
        LogComplex cp1 = eval_recurrence(p, n + 1, CReal(x));
        // x C_n - C_{n+1} - (n+a) C_n - a n C_{n-1} = 0 within cancellation slack
        LogComplex lhs = lc_sub(lc_mul(lc_from_real(x), c0),
                                lc_add(cp1, lc_add(lc_mul(lc_from_real(make_real(n, 40) + 1), c0),
                                                   lc_mul(lc_from_real(1 * make_real(n, 40)), cm1))));
        double scale = lc_log10_mod(cp1);
        double resid = lc_log10_mod(lhs);
        CHECK(resid - scale < -25.0);  // relative residual below 1e-25
    }
}

TEST_CASE("degree and leading coefficient at huge |x|") {
    auto p = params_a(1.0);
    for (double R : {1e6, 1e8}) {
        long n = 12;
        LogComplex v = eval_recurrence(p, n, CReal(make_real(R, 40)));
        double lead = lc_log10_mod(v) - n * std::log10(R);
        CHECK(std::fabs(lead) < 1e-3);  // monic degree-n growth
    }
}

TEST_CASE("explicit sum cap") {
    auto p = params_a(1.0);
    CHECK_THROWS_AS(eval_explicit_sum(p, 201, CReal(make_real(1L, 40))), CapabilityError);
}

TEST_CASE("precision exhaustion is reported") {
    PrecisionPolicy tight;
    tight.working_bits = 64;
    tight.max_bits = 128;
    tight.target_rel_err = 1e-300;
    CharlierParams p(make_real(1.0, 60), tight);
    CHECK_THROWS_AS(eval_recurrence(p, 40, CReal(make_real("0.37", 30))), PrecisionExhausted);
}

TEST_CASE("orthogonality examples") {
    auto p1 = params_a(1.0);
    // n = m = 0: the sum is e^a
    CHECK(to_double(orthogonality_check(p1, 0, 0, 120)) < 1e-30);
    // off-diagonal and diagonal cases from the module examples
    CHECK(to_double(orthogonality_check(p1, 2, 1, 120)) < 1e-20);
    auto ph = params_a(0.5);
    CHECK(to_double(orthogonality_check(ph, 3, 3, 120)) < 1e-20);
}

TEST_CASE("orthogonality tail check errors with a suggestion") {
    auto p = params_a(2.0);
    try {
        orthogonality_check(p, 8, 8, 12);
        FAIL("expected TailInsufficient");
    } catch (const TailInsufficient& e) {
        CHECK(e.suggested_k_max > 12);
    }
}

TEST_CASE("eval point scalings") {
    EvalPoint pt(100, CReal(make_real(120L, 40)));
    CHECK(to_double(pt.y().re) == doctest::Approx(1.2));
    CHECK(to_double(pt.t().re) == doctest::Approx(0.2 * 10.0));
    CHECK_THROWS_AS(EvalPoint(-1, CReal(make_real(0L, 40))), DomainError);
}
