#pragma once

#include <memory>
#include <vector>

#include "charlier/approx.hpp"
#include "charlier/params.hpp"

// Airy-type uniform approximations at the turning points t = +-2 sqrt(a):
// conformal maps eta, shift functions Phi, amplitudes A0, and the theorem
// formulas built from them. Near the turning point the maps are evaluated
// from one-time reverted Taylor series; away from it, from the closed forms.

namespace charlier {

inline constexpr int kTurningSeriesOrder = 16;

// Taylor coefficients in tau = t - 2 sqrt(a) of eta, Phi, A0 at the right
// turning point (the left point reuses them through t -> -t symmetry).
// Built once per parameter object; immutable afterwards.
struct TurningSeries {
    int digits;
    Real sqrt_a;
    Real switch_radius;        // 0.25 sqrt(a)
    std::vector<Real> eta;     // eta(tau) = sum eta[k] tau^k (eta[0] = 0)
    std::vector<Real> phi;     // Phi(tau)
    std::vector<Real> a0;      // A0(tau)
};

std::shared_ptr<const TurningSeries> build_turning_series(const Real& a, int digits);

struct TurningMapRight {
    CReal eta;
    CReal phi;
    CReal a0;
    CReal t;
};

struct TurningMapLeft {
    CReal eta_tilde;
    CReal phi_tilde;
    CReal a0_tilde;
    CReal t;
};

// (2/3) eta^{3/2} = t log((t + sqrt(t^2-4a))/(2 sqrt a)) - sqrt(t^2-4a),
// eta positive for real t > 2 sqrt a, analytic off (-inf, -2 sqrt a].
// Series path inside |t - 2 sqrt a| <= switch radius, closed forms beyond
// (theta parameterization on the open band, continued-argument branch off
// the real axis).
TurningMapRight map_right(const CharlierParams& params, const CReal& t);

// Left-point maps via the t -> -t structural symmetry:
// eta~(t) = eta(-t), Phi~(t) = -Phi(-t), A0~(t) = A0(-t).
TurningMapLeft map_left(const CharlierParams& params, const CReal& t);

// C_{K,n} x^{1/12} (a^x/Gamma(x+1))^{-1/2} A0(eta) Ai(n^{1/3} eta + n^{-1/6} Phi)
ApproxResult airy_formula_right(const CharlierParams& params, long n, const CReal& t);

enum class LeftRadiusPolicy { enforce, relaxed };

// C_{KK,n} x^{1/12} A0~(eta~)/sqrt(w(x)) [cos(x pi) Ai(Theta) - sin(x pi) Bi(Theta)],
// Theta = n^{1/3}(eta~ + Phi~/sqrt n), real t. Outside |t + 2 sqrt a| <=
// 0.75 sqrt(a) this raises OutOfNeighborhood unless relaxed (the Section-4
// coherence checks evaluate the same closed form further out).
ApproxResult airy_formula_left(const CharlierParams& params, long n, const Real& t,
                               LeftRadiusPolicy radius = LeftRadiusPolicy::enforce);

// One-sided dominant form C_{KK,n} x^{1/12} A0~/sqrt(w) e^{-(x pi + pi/3)i}
// Ai(omega Theta) for Im(t + 2 sqrt a) > |t + 2 sqrt a|^{3/2}; the conjugate
// form below the axis. AmbiguousDominance when the condition fails.
ApproxResult airy_formula_left_complex(const CharlierParams& params, long n, const CReal& t);

// Full two-term combination e^{-(x pi+pi/3)i} Ai(omega Theta) +
// e^{+(x pi+pi/3)i} Ai(omega^2 Theta); reduces to the real form for real t.
// Used by the router on complex points near the left edge.
ApproxResult airy_formula_left_two_term(const CharlierParams& params, long n, const CReal& t);

Real left_validity_radius(const CharlierParams& params, int digits);

// log C_{K,n} = log[(2a)^{n/2} Gamma((n+1)/2)/Gamma(1/2) (pi/(2a))^{1/4} e^{a/2}]
Real turning_prefactor_log(const CharlierParams& params, long n, int digits);

}  // namespace charlier
