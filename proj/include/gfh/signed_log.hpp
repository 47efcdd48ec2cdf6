#ifndef GFH_SIGNED_LOG_HPP
#define GFH_SIGNED_LOG_HPP

#include <cmath>
#include <limits>

#include "gfh/common.hpp"

namespace gfh {

// A real number stored as sign * exp(logmag).  Products of many factors
// (d+1 of them, each raised to the blending exponent) overflow doubles long
// before they stop being meaningful as ratios; adding logs never does.
// logmag is meaningful only when sign != 0.  sign == 0 with logmag == +inf is
// the "blew up at a node" sentinel; sign == 0 with logmag == -inf is exact 0.
template <class Real = double>
struct signed_log {
    int sign = 0;
    Real logmag = -std::numeric_limits<Real>::infinity();

    static signed_log zero() { return {0, -std::numeric_limits<Real>::infinity()}; }

    static signed_log infinite_sentinel() {
        return {0, std::numeric_limits<Real>::infinity()};
    }

    static signed_log from_value(Real v) {
        if (v == Real(0)) return zero();
        return {v > Real(0) ? 1 : -1, std::log(std::abs(v))};
    }

    bool is_zero() const { return sign == 0 && logmag < Real(0); }
    bool is_infinite_sentinel() const { return sign == 0 && logmag > Real(0); }

    // Linear-space value; overflows/underflows exactly where a plain double
    // computation would have.  Prefer shifting logmag first (see max-shift
    // blending in the evaluation engines).
    Real value() const {
        if (sign == 0) return Real(0);
        return Real(sign) * std::exp(logmag);
    }

    friend signed_log operator*(const signed_log& u, const signed_log& v) {
        if (u.sign == 0 || v.sign == 0) return zero();
        return {u.sign * v.sign, u.logmag + v.logmag};
    }

    signed_log pow_int(long long e) const {
        if (sign == 0) return *this;
        return {(sign < 0) ? parity_sign(e) : 1, logmag * Real(e)};
    }

    signed_log mul_value(Real v) const { return *this * from_value(v); }
};

}  // namespace gfh

#endif
