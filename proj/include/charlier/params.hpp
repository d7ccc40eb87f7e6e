#pragma once

#include <memory>
#include <string>

#include "charlier/precision.hpp"

namespace charlier {

struct TurningSeries;  // Taylor data of the turning-point maps (see turning.hpp)

// Fixed parameter a > 0 plus the arithmetic-precision policy. The turning-point
// map series are built eagerly at construction and immutable afterwards, so
// parameter objects can be shared freely across threads.
class CharlierParams {
  public:
    CharlierParams(const Real& a, PrecisionPolicy precision = {});
    CharlierParams(const std::string& a_decimal, PrecisionPolicy precision = {});
    static CharlierParams from_double(double a, PrecisionPolicy precision = {});

    const Real& a() const { return a_; }
    const PrecisionPolicy& precision() const { return precision_; }
    int digits() const { return precision_.digits(); }
    Real a_at(int digits) const;        // parameter rounded to a working precision
    Real sqrt_a(int digits) const;

    const TurningSeries& turning_series() const { return *series_; }

  private:
    Real a_;  // held at generous precision; rounded into each computation
    PrecisionPolicy precision_;
    std::shared_ptr<const TurningSeries> series_;
};

// (n, x) with the derived scalings y = x/n and t = sqrt(n)(y - 1), recomputed
// on access.
struct EvalPoint {
    long n = 0;
    CReal x;

    EvalPoint(long n_, CReal x_) : n(n_), x(std::move(x_)) {
        if (n < 0) throw DomainError("EvalPoint: n must be non-negative");
    }

    CReal y() const {
        if (n < 1) throw DomainError("EvalPoint: y undefined for n < 1");
        return x / make_real(n, static_cast<int>(x.re.precision()));
    }
    CReal t() const {
        int d = static_cast<int>(x.re.precision());
        Real rn = make_real(n, d);
        return (y() - CReal(make_real(1L, d))) * boost::multiprecision::sqrt(rn);
    }
    static EvalPoint from_t(long n, const CReal& t, int digits);
    static EvalPoint from_y(long n, const CReal& y, int digits);
};

}  // namespace charlier
