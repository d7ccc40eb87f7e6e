#pragma once

#include <vector>

#include "charlier/approx.hpp"
#include "charlier/params.hpp"

// Non-oscillatory asymptotics: the w_k product ladder with its error-bound
// constants, the outer closed form, the origin Gamma-ratio form, and the
// interior oscillatory form.

namespace charlier {

struct WkLadder {
    std::vector<CReal> w;       // w_1 .. w_n
    std::vector<CReal> delta;   // delta_k with w_k = (x - k)(1 + delta_k)
    std::vector<CReal> epsilon; // delta_k = (1-a)/(x-k) - a k/(x-k)^2 + eps_k
    Real m0, m1, big_n;         // Lemma bound constants for r = dist(y, [0,1])
    LogComplex log_product;     // sum of log w_k (the polynomial itself)
};

// w_1 = x - a, w_k = x - (k-1+a) - a(k-1)/w_{k-1}. Throws LadderBreakdown when
// some w_k vanishes.
WkLadder wk_ladder(const CharlierParams& params, long n, const CReal& x);

// n^n sqrt(y/(y-1)) e^{-a/(y-1)} e^{n[y log(y/(y-1)) - 1]} (y-1)^n,
// principal branches; y on [0,1] is a branch error. Error order O(1/n).
ApproxResult outer_formula(const CharlierParams& params, long n, const CReal& y);

// (-1)^n e^{a/(1-y)} Gamma(n-ny)/Gamma(-ny); near the positive real axis the
// identity form Gamma(x+1)/Gamma(1+x-n) is used. Non-negative integer x < n
// gives the approximation's exact zero.
ApproxResult origin_gamma_formula(const CharlierParams& params, long n, const CReal& y);

// 2 n^n sqrt(y/(1-y)) e^{-a/(y-1)} e^{n[y log(y/(1-y)) - 1]} (y-1)^n (-sin(ny pi))
// for real y in (0, 1).
ApproxResult interior_oscillatory_formula(const CharlierParams& params, long n,
                                          const Real& y);

}  // namespace charlier
