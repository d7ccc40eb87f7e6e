#include "charlier/params.hpp"

#include <algorithm>

#include "charlier/turning.hpp"

namespace charlier {

namespace {

int param_digits(const PrecisionPolicy& p) { return std::max(p.digits() * 2, 130); }

}  // namespace

CharlierParams::CharlierParams(const Real& a, PrecisionPolicy precision)
    : a_(a), precision_(precision) {
    a_.precision(param_digits(precision_));
    if (!(a_ > 0)) throw DomainError("CharlierParams: a must be positive");
    series_ = build_turning_series(a_, std::max(precision_.digits(), 60));
}

CharlierParams::CharlierParams(const std::string& a_decimal, PrecisionPolicy precision)
    : CharlierParams(make_real(a_decimal, param_digits(precision)), precision) {}

CharlierParams CharlierParams::from_double(double a, PrecisionPolicy precision) {
    return CharlierParams(make_real(a, param_digits(precision)), precision);
}

Real CharlierParams::a_at(int digits) const {
    Real r = a_;
    r.precision(digits);
    return r;
}

Real CharlierParams::sqrt_a(int digits) const {
    return boost::multiprecision::sqrt(a_at(digits));
}

EvalPoint EvalPoint::from_t(long n, const CReal& t, int digits) {
    Real rn = make_real(n, digits);
    CReal tw(t.re, t.im);
    tw.re.precision(digits);
    tw.im.precision(digits);
    return EvalPoint(n, CReal(rn) + tw * boost::multiprecision::sqrt(rn));
}

EvalPoint EvalPoint::from_y(long n, const CReal& y, int digits) {
    Real rn = make_real(n, digits);
    CReal yw(y.re, y.im);
    yw.re.precision(digits);
    yw.im.precision(digits);
    return EvalPoint(n, yw * rn);
}

}  // namespace charlier
