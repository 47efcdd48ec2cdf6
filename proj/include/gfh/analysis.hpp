#ifndef GFH_ANALYSIS_HPP
#define GFH_ANALYSIS_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfh/common.hpp"
#include "gfh/frame.hpp"
#include "gfh/interpolant.hpp"
#include "gfh/nodes.hpp"

namespace gfh {

// Evaluation grid: per_interval uniform samples strictly inside every node
// gap, optionally plus each gap's midpoint.  Nodes themselves are not grid
// members; study routines add them separately where they matter.
struct grid_spec {
    int per_interval = 20;
    bool include_midpoints = false;
};

template <class Real>
std::vector<Real> make_grid(const node_set<Real>& ns, const grid_spec& gs = {}) {
    if (gs.per_interval < 1)
        throw std::invalid_argument("grid_spec: per_interval must be >= 1");
    std::vector<Real> pts;
    pts.reserve(static_cast<std::size_t>(ns.n()) *
                (gs.per_interval + (gs.include_midpoints ? 1 : 0)));
    for (int j = 0; j < ns.n(); ++j) {
        const Real lo = ns.xs[j], gap = ns.xs[j + 1] - ns.xs[j];
        for (int t = 1; t <= gs.per_interval; ++t)
            pts.push_back(lo + Real(t) * gap / Real(gs.per_interval + 1));
        if (gs.include_midpoints) pts.push_back(lo + gap / Real(2));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

namespace detail {

template <class Real>
Real lebesgue_at(const frame<Real>& fr, Real x, blend_workspace<Real>& ws) {
    if (snap_index(fr.nodes(), x)) return Real(1);
    blend_terms(fr, x, ws);
    Real num = Real(0), den = Real(0);
    for (Real t : ws.term) {
        num += std::abs(t);
        den += t;
    }
    if (!std::isfinite(den) || den == Real(0))
        throw numeric_contract_error("lebesgue: blend denominator vanished or overflowed");
    return num / std::abs(den);
}

template <class Real>
Real moment_sum_at(const frame<Real>& fr, Real alpha, Real x,
                   blend_workspace<Real>& ws) {
    if (snap_index(fr.nodes(), x)) return Real(0);
    blend_terms(fr, x, ws);
    Real num = Real(0), den = Real(0);
    const auto& xs = fr.nodes().xs;
    for (std::size_t k = 0; k < ws.term.size(); ++k) {
        num += std::pow(std::abs(x - xs[k]), alpha) * std::abs(ws.term[k]);
        den += ws.term[k];
    }
    if (!std::isfinite(den) || den == Real(0))
        throw numeric_contract_error("moment sum: blend denominator vanished or overflowed");
    return num / std::abs(den);
}

}  // namespace detail

// Lebesgue function Lambda(x) = sum_k |b_k(x)|; 1 at the nodes, >= 1 anywhere.
template <class Real>
Real lebesgue_function(const frame<Real>& fr, Real x) {
    detail::blend_workspace<Real> ws;
    return detail::lebesgue_at(fr, x, ws);
}

// sum_k |x - x_k|^alpha |b_k(x)|; 0 at the nodes.
template <class Real>
Real weighted_moment_sum(const frame<Real>& fr, Real alpha, Real x) {
    if (!(alpha >= Real(0)))
        throw std::invalid_argument("weighted_moment_sum: alpha must be >= 0");
    detail::blend_workspace<Real> ws;
    return detail::moment_sum_at(fr, alpha, x, ws);
}

template <class Real = double>
struct lebesgue_report {
    Real constant = Real(1);  // grid maximum: a lower bound for the true sup
    Real argmax = Real(0);
};

template <class Real>
lebesgue_report<Real> lebesgue_constant(const frame<Real>& fr,
                                        const grid_spec& gs = {}) {
    const std::vector<Real> grid = make_grid(fr.nodes(), gs);
    detail::blend_workspace<Real> ws;
    lebesgue_report<Real> rep;
    rep.constant = Real(1);  // attained at every node
    rep.argmax = fr.nodes().a;
    for (Real x : grid) {
        const Real v = detail::lebesgue_at(fr, x, ws);
        if (v > rep.constant) {
            rep.constant = v;
            rep.argmax = x;
        }
    }
    return rep;
}

// Max |f - r| over the grid plus all nodes.  Refuses samples that do not
// actually agree with f at the nodes: interpolation error is meaningless then.
template <class Real, class F>
Real max_error(const interpolant<Real>& itp, F&& f, const grid_spec& gs = {}) {
    const auto& ns = itp.get_frame().nodes();
    for (int k = 0; k <= ns.n(); ++k) {
        const Real fx = f(ns.xs[k]);
        if (!(std::abs(itp.samples()[k] - fx) <=
              Real(1e-14) * std::max(Real(1), std::abs(fx))))
            throw std::invalid_argument(
                "max_error: samples disagree with f at node " + std::to_string(k));
    }
    Real err = Real(0);
    for (int k = 0; k <= ns.n(); ++k)
        err = std::max(err, std::abs(f(ns.xs[k]) - itp.eval_barycentric(ns.xs[k])));
    for (Real x : make_grid(ns, gs))
        err = std::max(err, std::abs(f(x) - itp.eval_barycentric(x)));
    return err;
}

template <class Real = double>
struct convergence_row {
    int k = 0;  // n = 2^k interpolation points
    int n = 0;
    Real error = Real(0);
    Real rate = std::numeric_limits<Real>::quiet_NaN();  // log2(E(n/2)/E(n))
};

// Doubling study on equidistant nodes over [-1, 1]: n = 2^k interpolation
// points (so 2^k - 1 gaps) for k in [k_min, k_max], max error per n,
// per-doubling rate from the second row on.  Counting points rather than
// gaps keeps the point count even, so features at the interval centre (the
// kink of |x|, say) fall mid-gap instead of on a node; that placement is
// what the pinned gamma-spread ratios in the acceptance checks measure.
template <class Real, class F>
std::vector<convergence_row<Real>> convergence_study(F&& f, int d, int gamma,
                                                     int k_min, int k_max,
                                                     const grid_spec& gs = {}) {
    if (k_min < 1 || k_max < k_min)
        throw std::invalid_argument("convergence_study: need 1 <= k_min <= k_max");
    if (d > (1 << k_min) - 1)
        throw std::invalid_argument(
            "convergence_study: window needs d+1 <= 2^k_min points");
    std::vector<convergence_row<Real>> rows;
    Real prev = Real(0);
    for (int k = k_min; k <= k_max; ++k) {
        const int n = 1 << k;
        node_set<Real> ns = make_equidistant<Real>(Real(-1), Real(1), n - 1);
        std::vector<Real> samples(ns.xs.size());
        for (std::size_t j = 0; j < samples.size(); ++j) samples[j] = f(ns.xs[j]);
        interpolant<Real> itp(frame<Real>(std::move(ns), params{d, gamma}),
                              std::move(samples));
        convergence_row<Real> row;
        row.k = k;
        row.n = n;
        row.error = max_error(itp, f, gs);
        if (k > k_min) row.rate = std::log2(prev / row.error);
        prev = row.error;
        rows.push_back(row);
    }
    return rows;
}

template <class Real = double>
struct lebesgue_row {
    int d = 0;
    int n = 0;
    int gamma = 1;
    Real constant = Real(1);
    Real argmax = Real(0);
};

// Lebesgue-constant table over equidistant nodes on [-1, 1], one row per
// (d, n) pair, d outer, n inner.
template <class Real = double>
std::vector<lebesgue_row<Real>> lebesgue_study(const std::vector<int>& d_list,
                                               const std::vector<int>& n_list,
                                               int gamma,
                                               const grid_spec& gs = {}) {
    std::vector<lebesgue_row<Real>> rows;
    for (int d : d_list)
        for (int n : n_list) {
            frame<Real> fr(make_equidistant<Real>(Real(-1), Real(1), n),
                           params{d, gamma});
            const lebesgue_report<Real> rep = lebesgue_constant(fr, gs);
            rows.push_back({d, n, gamma, rep.constant, rep.argmax});
        }
    return rows;
}

struct bench_row {
    std::string phase;
    int n = 0;
    int d = 0;
    int gamma = 1;
    long long m = 0;
    int repeats = 0;
    double median_seconds = 0;
    double model_units = 0;       // n d^2 / m n / m n d^2
    double seconds_per_unit = 0;  // median_seconds / model_units
};

namespace detail {

template <class F>
double median_seconds_of(F&& body, int repeats) {
    body();  // warm-up, discarded
    std::vector<double> times(repeats);
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        times[r] = std::chrono::duration<double>(t1 - t0).count();
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

}  // namespace detail

// Wall-clock medians for (a) classical weight precomputation, (b) classical
// evaluation at m points, (c) general-gamma evaluation at m points, on
// equidistant nodes over [-1, 1].  Evaluation points sit at gap-offset
// positions so none snap to a node.  Timing values are measurements; only the
// row layout is deterministic.
template <class Real = double>
std::vector<bench_row> timing_bench(int n, int d, int gamma, long long m,
                                    int repeats) {
    if (repeats < 1) throw std::invalid_argument("timing_bench: repeats >= 1");
    if (m < 1) throw std::invalid_argument("timing_bench: m >= 1");
    node_set<Real> ns = make_equidistant<Real>(Real(-1), Real(1), n);
    std::vector<Real> pts(m);
    for (long long j = 0; j < m; ++j)
        pts[j] = Real(-1) + (Real(j) + Real(0.5)) * Real(2) / Real(m);
    std::vector<Real> samples(ns.xs.size());
    for (std::size_t k = 0; k < samples.size(); ++k)
        samples[k] = std::sin(Real(3) * ns.xs[k]);

    std::vector<bench_row> rows;
    volatile Real sink = Real(0);  // keep the timed work observable

    const double t_pre = detail::median_seconds_of(
        [&] { sink = classical_weights(ns, d)[0]; }, repeats);
    rows.push_back({"classical_precompute", n, d, 1, 0, repeats, t_pre,
                    double(n) * d * d, t_pre / (double(n) * d * d)});

    interpolant<Real> cls(frame<Real>(ns, params{d, 1}), samples);
    const double t_cls = detail::median_seconds_of(
        [&] {
            Real acc = Real(0);
            for (Real x : pts) acc += cls.eval_classical(x);
            sink = acc;
        },
        repeats);
    rows.push_back({"classical_eval", n, d, 1, m, repeats, t_cls,
                    double(m) * n, t_cls / (double(m) * n)});

    interpolant<Real> gen(frame<Real>(ns, params{d, gamma}), samples);
    const double t_gen = detail::median_seconds_of(
        [&] {
            Real acc = Real(0);
            for (Real x : pts) acc += gen.eval_barycentric(x);
            sink = acc;
        },
        repeats);
    rows.push_back({"general_eval", n, d, gamma, m, repeats, t_gen,
                    double(m) * n * d * d, t_gen / (double(m) * n * d * d)});
    (void)sink;
    return rows;
}

}  // namespace gfh

#endif
