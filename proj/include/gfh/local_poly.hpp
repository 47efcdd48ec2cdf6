#ifndef GFH_LOCAL_POLY_HPP
#define GFH_LOCAL_POLY_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gfh/common.hpp"
#include "gfh/nodes.hpp"

namespace gfh {

// Contiguous node window x_i .. x_{i+d}: the support of one local
// interpolating polynomial of degree <= d.
struct window {
    int i = 0;
    int d = 0;
};

template <class Real>
inline void check_window(const node_set<Real>& ns, const window& w) {
    if (w.d < 0) throw std::invalid_argument("window: degree must be >= 0");
    if (w.i < 0 || w.i + w.d > ns.n())
        throw std::invalid_argument("window: node range out of bounds");
}

// Barycentric weights of the window's nodes, scaled so the largest magnitude
// is 1; logscale recovers the true size.  The common factor cancels in the
// second barycentric form, and keeping it separate defuses overflow when
// windows are wide or gaps are tiny.
template <class Real>
struct scaled_weights {
    std::vector<Real> w;  // signed, max |w| == 1
    Real logscale = Real(0);
};

template <class Real>
scaled_weights<Real> window_weights(const node_set<Real>& ns, const window& win) {
    check_window(ns, win);
    const int m = win.d + 1;
    scaled_weights<Real> out;
    out.w.resize(m);
    Real maxabs = Real(0);
    for (int j = 0; j < m; ++j) {
        const Real xk = ns.xs[win.i + j];
        Real prod = Real(1);
        for (int s = 0; s < m; ++s) {
            if (s == j) continue;
            prod *= xk - ns.xs[win.i + s];
        }
        out.w[j] = Real(1) / prod;
        maxabs = std::max(maxabs, std::abs(out.w[j]));
    }
    for (Real& v : out.w) v /= maxabs;
    out.logscale = std::log(maxabs);
    return out;
}

// Value at x of the polynomial of degree <= win.d interpolating
// (x_k, samples[k]) for k in the window, by the second barycentric form with
// caller-supplied window weights (they only depend on the nodes, so batch
// evaluation computes them once).  x within snap tolerance of a window node
// returns that sample verbatim; ties go to the lower index.
template <class Real>
Real eval_local(const node_set<Real>& ns, const std::vector<Real>& samples,
                const window& win, Real x, const scaled_weights<Real>& sw) {
    const Real tol = snap_tolerance(ns);
    const int m = win.d + 1;
    for (int j = 0; j < m; ++j)
        if (std::abs(x - ns.xs[win.i + j]) <= tol)
            return samples[win.i + j];
    Real num = Real(0), den = Real(0);
    for (int j = 0; j < m; ++j) {
        const Real c = sw.w[j] / (x - ns.xs[win.i + j]);
        num += c * samples[win.i + j];
        den += c;
    }
    return num / den;
}

template <class Real>
Real eval_local(const node_set<Real>& ns, const std::vector<Real>& samples,
                const window& win, Real x) {
    check_window(ns, win);
    if (samples.size() != ns.xs.size())
        throw std::invalid_argument("eval_local: samples/nodes size mismatch");
    const scaled_weights<Real> sw = window_weights(ns, win);
    return eval_local(ns, samples, win, x, sw);
}

}  // namespace gfh

#endif
