#pragma once

#include "charlier/log_scalar.hpp"
#include "charlier/params.hpp"

// Ground-truth oracle: exact evaluation of monic Charlier polynomials by
// forward recurrence and by the explicit finite sum, in adaptively escalated
// precision (two-level stability check, doubling bits up to the policy cap).

namespace charlier {

inline constexpr long kExplicitSumCap = 200;

// C_{n+1} = (x - n - a) C_n - a n C_{n-1}, C_{-1} = 0, C_0 = 1, carried in
// SignedLogValue (real x) / LogComplex (complex x) arithmetic.
LogComplex eval_recurrence(const CharlierParams& params, long n, const CReal& x);

// sum_{k=0}^{n} binom(n,k) binom(x,k) k! (-a)^{n-k}; binom(x,k) as a running
// falling-factorial product so integer x stays exact.
LogComplex eval_explicit_sum(const CharlierParams& params, long n, const CReal& x,
                             long sum_cap = kExplicitSumCap);

// Relative deviation of sum_{k<=k_max} C_n(k) C_m(k) a^k/k! from
// e^a a^n n! delta_{mn}, measured against e^a a^n n!.
Real orthogonality_check(const CharlierParams& params, long n, long m, long k_max);

}  // namespace charlier
