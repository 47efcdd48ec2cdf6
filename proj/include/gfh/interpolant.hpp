#ifndef GFH_INTERPOLANT_HPP
#define GFH_INTERPOLANT_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfh/common.hpp"
#include "gfh/dd.hpp"
#include "gfh/frame.hpp"
#include "gfh/local_poly.hpp"
#include "gfh/nodes.hpp"
#include "gfh/signed_log.hpp"

namespace gfh {

// ---------------------------------------------------------------------------
// Blend coefficients.
//
// The interpolant blends the n-d+1 local polynomials p_i (degree <= d on
// window x_i..x_{i+d}) with weights
//     lambda_i(x) = (-1)^{i*gamma} / prod_{s=i}^{i+d} (x - x_s)^gamma,
// i.e. r(x) = sum_i lambda_i(x) p_i(x) / sum_i lambda_i(x).  Multiplying
// through by prod_k (x - x_k)^gamma turns lambda_i into the polynomial
//     mu_i(x) = prod_{k<i} (x - x_k)^gamma * prod_{k>i+d} (x_k - x)^gamma
// (empty products = 1), whose sum Q is strictly positive on the whole real
// line -- the blend has no real poles.
// ---------------------------------------------------------------------------

template <class Real>
signed_log<Real> lambda_tilde(const frame<Real>& fr, int i, Real x) {
    if (i < 0 || i >= fr.n_windows())
        throw std::invalid_argument("lambda_tilde: window index out of range");
    const auto& xs = fr.nodes().xs;
    const int g = fr.gamma();
    long long sgn_exp = static_cast<long long>(i) * g;
    Real lm = Real(0);
    for (int s = i; s <= i + fr.d(); ++s) {
        const Real t = x - xs[s];
        if (t == Real(0)) return signed_log<Real>::infinite_sentinel();
        if (t < Real(0)) sgn_exp += g;
        lm -= Real(g) * std::log(std::abs(t));
    }
    return {parity_sign(sgn_exp), lm};
}

template <class Real>
Real mu_tilde(const frame<Real>& fr, int i, Real x) {
    if (i < 0 || i >= fr.n_windows())
        throw std::invalid_argument("mu_tilde: window index out of range");
    const auto& xs = fr.nodes().xs;
    const int g = fr.gamma();
    Real prod = Real(1);
    for (int k = 0; k < i; ++k) prod *= ipow(x - xs[k], g);
    for (int k = i + fr.d() + 1; k <= fr.n(); ++k) prod *= ipow(xs[k] - x, g);
    return prod;
}

// Q(x) = sum_i mu_i(x), assembled from running prefix/suffix products so the
// whole sum costs O(n) instead of O(n^2).  Positive for every real x.
template <class Real>
Real denominator_q(const frame<Real>& fr, Real x) {
    const auto& xs = fr.nodes().xs;
    const int n = fr.n(), d = fr.d(), g = fr.gamma();
    const int nw = n - d + 1;
    std::vector<Real> left(nw);  // left[i] = prod_{k<i} (x - x_k)^gamma
    left[0] = Real(1);
    for (int i = 1; i < nw; ++i) left[i] = left[i - 1] * ipow(x - xs[i - 1], g);
    Real q = Real(0);
    Real right = Real(1);  // prod_{k>j} (x_k - x)^gamma, j descending from n
    for (int i = nw - 1; i >= 0; --i) {
        q += left[i] * right;
        right *= ipow(xs[i + d] - x, g);
    }
    return q;
}

// ---------------------------------------------------------------------------
// Node weights of the rational-blend form
//     r(x) = sum_k [w_k(x) / (x - x_k)^gamma] f_k
//          / sum_k [w_k(x) / (x - x_k)^gamma],
//     w_k(x) = sum_{i in J_k} (-1)^{i*gamma}
//              prod_{s=i, s!=k}^{i+d} 1 / ((x_k - x_s)(x - x_s)^{gamma-1}),
// where J_k indexes the windows containing node k.  Each inner product is
// accumulated as (mantissa, base-2 exponent) with an overflow guard, and the
// final weights are released under one shared positive scale chosen from the
// largest term, so ratios survive even when raw magnitudes would overflow.
// For gamma == 1 the x-dependence drops out entirely.
// ---------------------------------------------------------------------------

namespace detail {

template <class Real>
struct scaled2 {  // value = m * 2^e, |m| kept inside the guard band
    Real m;
    int e;
};

}  // namespace detail

template <class Real>
std::vector<Real> weights_at(const frame<Real>& fr, Real x) {
    const auto& ns = fr.nodes();
    if (snap_index(ns, x))
        throw std::domain_error(
            "weights_at: x is inside a node snap zone; evaluate by snapping instead");
    const auto& xs = ns.xs;
    const int n = fr.n(), d = fr.d(), g = fr.gamma();

    std::vector<Real> pw(n + 1);  // (x - x_s)^{gamma-1}
    for (int s = 0; s <= n; ++s) pw[s] = ipow(x - xs[s], g - 1);

    const int guard = std::numeric_limits<Real>::max_exponent / 2;
    const Real big = std::ldexp(Real(1), guard);
    const Real small = Real(1) / big;

    std::vector<detail::scaled2<Real>> tau;
    tau.reserve(static_cast<std::size_t>(n + 1) * (d + 1));
    std::vector<int> first(n + 2);
    int max_e = std::numeric_limits<int>::min();
    for (int k = 0; k <= n; ++k) {
        first[k] = static_cast<int>(tau.size());
        const int ilo = std::max(0, k - d);
        const int ihi = std::min(n - d, k);
        for (int i = ilo; i <= ihi; ++i) {
            Real m = (static_cast<long long>(i) * g) & 1LL ? Real(-1) : Real(1);
            int e = 0;
            for (int s = i; s <= i + d; ++s) {
                if (s == k) continue;
                m /= (xs[k] - xs[s]) * pw[s];
                const Real am = std::abs(m);
                if (am > big || am < small) {
                    int ee;
                    m = std::frexp(m, &ee);
                    e += ee;
                }
            }
            int ee;
            m = std::frexp(m, &ee);
            e += ee;
            tau.push_back({m, e});
            max_e = std::max(max_e, e);
        }
    }
    first[n + 1] = static_cast<int>(tau.size());

    std::vector<Real> w(n + 1);
    for (int k = 0; k <= n; ++k) {
        Real acc = Real(0);
        for (int t = first[k]; t < first[k + 1]; ++t)
            acc += std::ldexp(tau[t].m, tau[t].e - max_e);
        w[k] = acc;
    }
    return w;
}

// Classical x-independent weights of the gamma == 1 blend, computed by the
// direct per-window products in O(n d^2).
template <class Real>
std::vector<Real> classical_weights(const node_set<Real>& ns, int d) {
    const int n = ns.n();
    if (d < 0 || d > n) throw std::invalid_argument("classical_weights: bad degree");
    std::vector<Real> w(n + 1, Real(0));
    for (int k = 0; k <= n; ++k) {
        const int ilo = std::max(0, k - d);
        const int ihi = std::min(n - d, k);
        for (int i = ilo; i <= ihi; ++i) {
            Real prod = (i & 1) ? Real(-1) : Real(1);
            for (int s = i; s <= i + d; ++s) {
                if (s == k) continue;
                prod /= ns.xs[k] - ns.xs[s];
            }
            w[k] += prod;
        }
    }
    return w;
}

// ---------------------------------------------------------------------------
// Cardinal basis.  b_k(x) is 1 at x_k, 0 at the other nodes, and
// w_k(x) / ((x - x_k)^gamma D(x)) elsewhere, D being the blend denominator in
// weight form.  The b_k sum to 1 wherever they are defined.
// ---------------------------------------------------------------------------

template <class Real = double>
struct basis_vector {
    std::vector<Real> values;
};

template <class Real>
basis_vector<Real> basis_at(const frame<Real>& fr, Real x) {
    const auto& ns = fr.nodes();
    basis_vector<Real> out;
    if (auto k = snap_index(ns, x)) {
        out.values.assign(ns.xs.size(), Real(0));
        out.values[*k] = Real(1);
        return out;
    }
    const std::vector<Real> w = weights_at(fr, x);
    const int n = fr.n(), g = fr.gamma();
    out.values.resize(n + 1);
    Real den = Real(0);
    for (int k = 0; k <= n; ++k) {
        const Real t = w[k] / ipow(x - ns.xs[k], g);
        out.values[k] = t;
        den += t;
    }
    if (!std::isfinite(den) || den == Real(0))
        throw numeric_contract_error("basis: blend denominator vanished or overflowed");
    for (Real& v : out.values) v /= den;
    return out;
}

namespace detail {

template <class Real>
struct blend_workspace {
    std::vector<Real> term;    // blend term per node, common scale
    std::vector<Real> prefix;  // prefix sums of log|x - x_s|
    std::vector<Real> lm;      // shifted log magnitude per window
};

// Blend terms proportional to w_k(x)/(x - x_k)^gamma under one common scale,
// via the per-window regrouping
//   w_k(x)/(x-x_k)^gamma = sum_{i in J_k} lambda_i(x) l_i(x) beta_{i,k} / (x-x_k),
// where l_i is the window node polynomial and beta_{i,k} the cached window
// barycentric weights.  lambda_i l_i = (-1)^{i*gamma} l_i^{1-gamma} is carried
// in log form and released by max-shift; cost O(n d) per x instead of the
// O(n d^2) of the direct weight products.  Callers handle node snapping.
template <class Real>
void blend_terms(const frame<Real>& fr, Real x, blend_workspace<Real>& ws) {
    const auto& xs = fr.nodes().xs;
    const int n = fr.n(), d = fr.d(), g = fr.gamma();
    const int nw = fr.n_windows();

    if (g > 1) {  // prefix sums of log|x - x_s|, unused for gamma == 1
        ws.prefix.resize(n + 2);
        ws.prefix[0] = Real(0);
        for (int s = 0; s <= n; ++s)
            ws.prefix[s + 1] = ws.prefix[s] + std::log(std::abs(x - xs[s]));
    }
    // first node index strictly above x: that node and later ones contribute
    // negative factors (x - x_s) to the window polynomial
    const int pos = static_cast<int>(
        std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());

    ws.term.assign(n + 1, Real(0));
    ws.lm.resize(nw);
    Real maxlog = -std::numeric_limits<Real>::infinity();
    for (int i = 0; i < nw; ++i) {
        Real v = fr.win_logscale(i);
        if (g > 1) v += Real(1 - g) * (ws.prefix[i + d + 1] - ws.prefix[i]);
        ws.lm[i] = v;
        maxlog = std::max(maxlog, v);
    }
    for (int i = 0; i < nw; ++i) {
        const int neg = std::max(0, (i + d) - std::max(i - 1, pos - 1));
        const long long sgn_exp =
            static_cast<long long>(i) * g + static_cast<long long>(neg) * (g - 1);
        Real t = std::exp(ws.lm[i] - maxlog);
        if ((sgn_exp & 1LL) != 0) t = -t;
        if (t == Real(0)) continue;
        const Real* wrow = fr.win_weight_row(i);
        Real* out = ws.term.data() + i;
        for (int j = 0; j <= d; ++j) out[j] += t * wrow[j];
    }
    for (int k = 0; k <= n; ++k) ws.term[k] /= x - xs[k];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The interpolant: a frame plus node samples, evaluated by one of three
// engines.
//   naive       -- reference engine: evaluates the defining blend formula
//                  directly, in double-double internal arithmetic.  The
//                  window sum cancels by factors that grow with d near the
//                  interval ends (the weight form removes that mass
//                  analytically), so plain Real accumulation would drift;
//                  double-double keeps the reference orders of magnitude
//                  tighter than the production engines it vouches for.
//   barycentric -- weight form via weights_at; default engine
//   classical   -- gamma == 1 only, precomputed x-independent weights
// All engines return the sample verbatim inside a node snap zone.
// ---------------------------------------------------------------------------

enum class engine { naive, barycentric, classical };

template <class Real = double>
class interpolant {
  public:
    interpolant(frame<Real> fr, std::vector<Real> samples)
        : fr_(std::move(fr)), fx_(std::move(samples)) {
        if (fx_.size() != fr_.nodes().xs.size())
            throw std::invalid_argument("interpolant: samples/nodes size mismatch");
        if (!all_finite(fx_.data(), fx_.size()))
            throw std::invalid_argument("interpolant: samples must be finite");
        if (fr_.gamma() == 1) cw_ = classical_weights(fr_.nodes(), fr_.d());
    }

    const frame<Real>& get_frame() const { return fr_; }
    const std::vector<Real>& samples() const { return fx_; }

    // Present exactly when gamma == 1.
    const std::vector<Real>& classical_weight_table() const {
        if (fr_.gamma() != 1)
            throw std::logic_error("classical weights exist only for gamma == 1");
        return cw_;
    }

    Real eval_naive(Real x) const {
        using sdd = detail::scaled_dd<Real>;
        const auto& ns = fr_.nodes();
        if (auto k = snap_index(ns, x)) return fx_[*k];
        const auto& xs = ns.xs;
        const int d = fr_.d(), g = fr_.gamma();
        const int nw = fr_.n_windows();
        std::vector<sdd> nums(nw), dens(nw), pk(d + 1);
        for (int i = 0; i < nw; ++i) {
            // window node polynomial P = prod_{s=i}^{i+d} (x - x_s); the
            // two_diff factors are exact, so P carries full dd precision
            sdd P = sdd::one();
            for (int s = i; s <= i + d; ++s) P.mul(detail::two_diff(x, xs[s]));
            // local Lagrange value p_i = sum_k f_k (P / (x - x_k)) / D_k,
            // D_k = prod_{s != k} (x_k - x_s)
            for (int k = i; k <= i + d; ++k) {
                sdd t = P;
                t.div(detail::two_diff(x, xs[k]));
                sdd D = sdd::one();
                for (int s = i; s <= i + d; ++s)
                    if (s != k) D.mul(detail::two_diff(xs[k], xs[s]));
                t.div_scaled(D);
                t.mul_real(fx_[k]);
                pk[k - i] = t;
            }
            const sdd pi = detail::sum_scaled(pk);
            // lambda_i = (-1)^{i gamma} / P^gamma
            sdd lam = P.pow_int(g).reciprocal();
            if (parity_sign(static_cast<long long>(i) * g) < 0) lam.negate();
            dens[i] = lam;
            lam.mul_scaled(pi);
            nums[i] = lam;
        }
        const sdd den = detail::sum_scaled(dens);
        if (den.is_zero())
            throw numeric_contract_error("eval: blend denominator vanished or overflowed");
        sdd r = detail::sum_scaled(nums);
        r.div_scaled(den);
        return r.to_real();
    }

    Real eval_barycentric(Real x) const {
        const auto& ns = fr_.nodes();
        if (auto k = snap_index(ns, x)) return fx_[*k];
        const std::vector<Real> w = weights_at(fr_, x);
        const int n = fr_.n(), g = fr_.gamma();
        Real num = Real(0), den = Real(0);
        for (int k = 0; k <= n; ++k) {
            const Real c = w[k] / ipow(x - ns.xs[k], g);
            num += c * fx_[k];
            den += c;
        }
        if (!std::isfinite(den) || den == Real(0))
            throw numeric_contract_error("eval: blend denominator vanished or overflowed");
        return num / den;
    }

    Real eval_classical(Real x) const {
        if (fr_.gamma() != 1)
            throw std::invalid_argument("classical engine requires gamma == 1");
        const auto& ns = fr_.nodes();
        if (auto k = snap_index(ns, x)) return fx_[*k];
        Real num = Real(0), den = Real(0);
        for (int k = 0; k <= fr_.n(); ++k) {
            const Real c = cw_[k] / (x - ns.xs[k]);
            num += c * fx_[k];
            den += c;
        }
        if (!std::isfinite(den) || den == Real(0))
            throw numeric_contract_error("eval: blend denominator vanished or overflowed");
        return num / den;
    }

    Real eval(Real x, engine e = engine::barycentric) const {
        switch (e) {
            case engine::naive: return eval_naive(x);
            case engine::classical: return eval_classical(x);
            default: return eval_barycentric(x);
        }
    }

    Real operator()(Real x) const { return eval_barycentric(x); }

  private:
    frame<Real> fr_;
    std::vector<Real> fx_;
    std::vector<Real> cw_;  // classical weights, gamma == 1 only
};

}  // namespace gfh

#endif
