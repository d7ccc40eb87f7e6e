#pragma once

#include "charlier/approx.hpp"
#include "charlier/params.hpp"

// Asymptotics near y = 1 but away from the turning points: the intermediate
// closed form and the band-interior cosine form.

namespace charlier {

// Branch data at a point t: sqrt(t^2-4a) analytic off [-2 sqrt a, 2 sqrt a]
// and ~ t at infinity; log factor log((t - sqrt(t^2-4a))/(2 sqrt a)) principal.
struct IntermediatePhase {
    CReal t;
    CReal sqrt_disc;
    CReal log_factor;
};

IntermediatePhase intermediate_phase(const CharlierParams& params, const CReal& t);

// sqrt(t^2 - 4a) on the stated branch (via principal sqrt(t-2sqrt a)*sqrt(t+2sqrt a))
CReal sqrt_disc_branch(const CReal& t, const Real& sqrt_a);
// log(t^2 - 4a) as log(t-2sqrt a) + log(t+2sqrt a), analytic off (-inf, 2 sqrt a]
CReal log_disc_branch(const CReal& t, const Real& sqrt_a);

// C/sqrt(w(x)) exp(sqrt n [t log((t-sqrt(t^2-4a))/(2 sqrt a)) + sqrt(t^2-4a)]
//   - (1/4) log(t^2-4a) + (t/4) sqrt(t^2-4a)),
// C = (2a)^{n/2} Gamma((n+1)/2)/Gamma(1/2) 2^{-3/4} pi^{-1/4} e^{a/2},
// w(x) = a^x / Gamma(x+1). t on (-inf, 2 sqrt a] is a branch error.
ApproxResult intermediate_formula(const CharlierParams& params, long n, const CReal& t);

// 2C/(sqrt(w(x)) (4a-t^2)^{1/4}) cos(2 sqrt(an)[sin th - th cos th]
//   + a sin th cos th - pi/4), t = 2 sqrt(a) cos th, th in (0, pi).
ApproxResult band_cosine_formula(const CharlierParams& params, long n, const Real& theta);

// shared prefactor C (log of it) used by the intermediate and band forms
Real intermediate_prefactor_log(const CharlierParams& params, long n, int digits);

// w(x)^{-1/2} = (Gamma(x+1)/a^x)^{1/2} in log form
LogComplex inv_sqrt_weight(const CharlierParams& params, const CReal& x, int digits);

}  // namespace charlier
