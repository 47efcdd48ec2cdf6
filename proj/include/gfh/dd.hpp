#ifndef GFH_DD_HPP
#define GFH_DD_HPP

#include <cmath>
#include <vector>

namespace gfh {
namespace detail {

// ---------------------------------------------------------------------------
// Double-double helpers for the reference engine: an unevaluated sum
// hi + lo with |lo| <= ulp(hi)/2 carries roughly twice the significand
// bits of Real.  The reference blend sums window contributions whose exact
// cancellation can reach many orders of magnitude, so it accumulates in this
// representation and releases a plain Real only at the very end.  Only the
// operations that path needs are provided.
// ---------------------------------------------------------------------------

template <class Real>
struct dd {
    Real hi = Real(0), lo = Real(0);
};

template <class Real>
dd<Real> two_sum(Real a, Real b) {
    const Real s = a + b;
    const Real bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| or a == 0
template <class Real>
dd<Real> quick_two_sum(Real a, Real b) {
    const Real s = a + b;
    return {s, b - (s - a)};
}

template <class Real>
dd<Real> two_diff(Real a, Real b) {
    const Real s = a - b;
    const Real bb = s - a;
    return {s, (a - (s - bb)) - (b + bb)};
}

template <class Real>
dd<Real> two_prod(Real a, Real b) {
    const Real p = a * b;
    return {p, std::fma(a, b, -p)};
}

template <class Real>
dd<Real> dd_add(const dd<Real>& a, const dd<Real>& b) {
    const dd<Real> s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

template <class Real>
dd<Real> dd_mul(const dd<Real>& a, const dd<Real>& b) {
    const dd<Real> p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + (a.hi * b.lo + a.lo * b.hi));
}

template <class Real>
dd<Real> dd_div(const dd<Real>& a, const dd<Real>& b) {
    const Real q1 = a.hi / b.hi;
    const dd<Real> q1b = dd_mul(dd<Real>{q1, Real(0)}, b);
    const dd<Real> r = dd_add(a, dd<Real>{-q1b.hi, -q1b.lo});
    const Real q2 = (r.hi + r.lo) / b.hi;
    return quick_two_sum(q1, q2);
}

// ---------------------------------------------------------------------------
// A double-double mantissa with a separate base-2 exponent: value = m * 2^e,
// |m.hi| kept in [0.5, 1).  Long products over windows stay representable for
// any node spacing; the exponent never touches the Real range until release.
// ---------------------------------------------------------------------------

template <class Real>
struct scaled_dd {
    dd<Real> m{Real(0.5), Real(0)};
    long e = 1;  // default value: 0.5 * 2^1 = 1

    static scaled_dd one() { return {}; }
    bool is_zero() const { return m.hi == Real(0); }

    void normalize() {
        if (m.hi == Real(0)) return;
        int k;
        std::frexp(m.hi, &k);
        if (k != 0) {
            m.hi = std::ldexp(m.hi, -k);
            m.lo = std::ldexp(m.lo, -k);
            e += k;
        }
    }
    void negate() {
        m.hi = -m.hi;
        m.lo = -m.lo;
    }
    void mul(const dd<Real>& f) {
        m = dd_mul(m, f);
        normalize();
    }
    void mul_real(Real c) { mul(dd<Real>{c, Real(0)}); }
    void div(const dd<Real>& f) {
        m = dd_div(m, f);
        normalize();
    }
    void mul_scaled(const scaled_dd& o) {
        m = dd_mul(m, o.m);
        e += o.e;
        normalize();
    }
    void div_scaled(const scaled_dd& o) {
        m = dd_div(m, o.m);
        e -= o.e;
        normalize();
    }
    scaled_dd pow_int(int p) const {  // p >= 1
        scaled_dd r = *this;
        for (int t = 1; t < p; ++t) r.mul_scaled(*this);
        return r;
    }
    scaled_dd reciprocal() const {
        scaled_dd r;
        r.m = dd_div(dd<Real>{Real(1), Real(0)}, m);
        r.e = -e;
        r.normalize();
        return r;
    }
    Real to_real() const {
        const int sh = static_cast<int>(e);
        return std::ldexp(m.hi, sh) + std::ldexp(m.lo, sh);
    }
};

// Sum of scaled terms: align every mantissa to the largest exponent (terms
// more than the whole dd width below it flush to zero harmlessly) and
// accumulate in double-double.
template <class Real>
scaled_dd<Real> sum_scaled(const std::vector<scaled_dd<Real>>& terms) {
    long emax = 0;
    bool any = false;
    for (const auto& t : terms)
        if (!t.is_zero() && (!any || t.e > emax)) {
            emax = t.e;
            any = true;
        }
    scaled_dd<Real> out;
    out.m = dd<Real>{Real(0), Real(0)};
    out.e = 0;
    if (!any) return out;  // exact zero
    dd<Real> acc{Real(0), Real(0)};
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        const int sh = static_cast<int>(t.e - emax);  // <= 0
        acc = dd_add(acc, dd<Real>{std::ldexp(t.m.hi, sh), std::ldexp(t.m.lo, sh)});
    }
    out.m = acc;
    out.e = emax;
    out.normalize();
    return out;
}

}  // namespace detail
}  // namespace gfh

#endif
