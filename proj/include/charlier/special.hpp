#pragma once

#include "charlier/log_scalar.hpp"
#include "charlier/precision.hpp"

namespace charlier {

// Ai, Bi and derivatives at a real point. Wronskian ai*bi' - ai'*bi = 1/pi.
struct AiryPair {
    Real ai, ai_prime, bi, bi_prime;
};

enum class AiryRotation { omega, omega_sq };  // omega = e^{2 pi i/3}

struct RotatedAiryValue {
    LogComplex value;
    AiryRotation rotation;
};

// Maclaurin series for moderate |z| (extended working precision absorbs the
// cancellation), large-argument asymptotic expansions beyond. Accuracy target
// 10^-digits capped by the expansions' floor ~ e^{-(4/3)|z|^{3/2}} far out;
// callers here stay well above 1e-12.
AiryPair airy_eval(const Real& z, int digits);

// Ai(s * rotation) for real s, via e^{-+ pi i/3} Ai(s e^{+-2 pi i/3}) = (Ai(s) -+ i Bi(s))/2.
RotatedAiryValue airy_rotated(const Real& s, AiryRotation rot, int digits);

// Ai at a complex point (series/asymptotic); needed by the one-sided
// turning-point form where the argument is genuinely complex.
CReal airy_ai_complex(const CReal& z, int digits);

// internal paths exposed for the series/asymptotic stitch test
AiryPair airy_eval_series(const Real& z, int digits);
AiryPair airy_eval_asymptotic(const Real& z, int digits);

// Principal-branch log Gamma. For Re z >= 0.5 the value is the principal
// log-gamma (Stirling with recurrence lift); for Re z < 0.5 the reflection
// formula is used and the imaginary part is only meaningful mod 2*pi, which
// is exactly what LogComplex represents. Poles raise PoleError.
LogComplex log_gamma(const CReal& z, int digits);
LogComplex log_gamma_real(const Real& x, int digits);

// log(Gamma(num)/Gamma(den)) with pole bookkeeping: den at a pole gives the
// exact-zero LogComplex; num at a pole gives log_mod = +inf; both at poles
// raises IndeterminateRatio.
LogComplex log_gamma_ratio(const CReal& num, const CReal& den, int digits);

bool gamma_is_pole(const CReal& z, int digits);

}  // namespace charlier
