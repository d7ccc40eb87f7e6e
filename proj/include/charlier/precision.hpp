#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

// Scalar layer. Real is an arbitrary-precision binary float with runtime
// precision. The process-wide default precision is set once at startup and
// never mutated afterwards; every computation seeds its inputs at an explicit
// decimal-digit count and relies on the backend's max-of-operands precision
// propagation. This keeps concurrent sweeps race-free.

namespace charlier {

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BranchError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct LadderBreakdown : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct IndeterminateRatio : Error { using Error::Error; };
struct TailInsufficient : Error {
    long suggested_k_max;
    TailInsufficient(const std::string& msg, long k) : Error(msg), suggested_k_max(k) {}
};
struct CapabilityError : Error { using Error::Error; };
struct OutOfNeighborhood : Error { using Error::Error; };
struct AmbiguousDominance : Error { using Error::Error; };
struct IncompleteScan : Error {
    long zeros_found;
    IncompleteScan(const std::string& msg, long found) : Error(msg), zeros_found(found) {}
};

// decimal digits needed to realize `bits` of binary precision
int digits_for_bits(int bits);

Real make_real(double v, int digits);
Real make_real(long v, int digits);
Real make_real(const std::string& decimal, int digits);
Real pi_at(int digits);

inline double to_double(const Real& r) { return r.convert_to<double>(); }
bool is_finite(const Real& r);

// Complex value over Real. Principal branches throughout.
struct CReal {
    Real re, im;

    CReal() = default;
    CReal(Real r) : re(std::move(r)), im(zero_like(re)) {}
    CReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im.is_zero(); }

    static Real zero_like(const Real& r) {
        Real z(0);
        z.precision(r.precision());
        return z;
    }
};

CReal operator+(const CReal& a, const CReal& b);
CReal operator-(const CReal& a, const CReal& b);
CReal operator-(const CReal& a);
CReal operator*(const CReal& a, const CReal& b);
CReal operator/(const CReal& a, const CReal& b);
inline CReal operator+(const CReal& a, const Real& b) { return a + CReal(b); }
inline CReal operator-(const CReal& a, const Real& b) { return a - CReal(b); }
inline CReal operator*(const CReal& a, const Real& b) { return CReal(a.re * b, a.im * b); }
inline CReal operator*(const Real& b, const CReal& a) { return a * b; }
inline CReal operator/(const CReal& a, const Real& b) { return CReal(a.re / b, a.im / b); }

CReal conj(const CReal& z);
Real abs(const CReal& z);       // hypot, exponent-range safe
Real arg(const CReal& z);       // atan2(im, re) in (-pi, pi]
CReal sqrt(const CReal& z);     // principal
CReal log(const CReal& z);      // principal
CReal exp(const CReal& z);

// exact argument reduction for trig at huge real x: returns sin(pi x), cos(pi x)
void sin_cos_pi(const Real& x, Real& sin_out, Real& cos_out);

// distance from complex y to the real segment [0, 1]
Real dist_to_unit_segment(const CReal& y);

// Arithmetic-precision policy. working_bits only ever escalates during an
// adaptive evaluation; max_bits is the hard cap.
struct PrecisionPolicy {
    int working_bits = 256;
    double target_rel_err = 1e-40;
    int max_bits = 16384;

    int digits() const { return digits_for_bits(working_bits); }
};

}  // namespace charlier
