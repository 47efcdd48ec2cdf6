#ifndef GFH_NODES_HPP
#define GFH_NODES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfh/common.hpp"

namespace gfh {

// Strictly increasing interpolation nodes x_0 < ... < x_n on [a, b] together
// with the extreme gap widths.  n counts intervals, so xs.size() == n + 1.
template <class Real = double>
struct node_set {
    Real a = Real(-1);
    Real b = Real(1);
    std::vector<Real> xs;
    Real h = Real(0);      // widest gap
    Real hstar = Real(0);  // narrowest gap

    int n() const { return static_cast<int>(xs.size()) - 1; }
    Real mesh_ratio() const { return h / hstar; }
};

namespace detail {

template <class Real>
inline void set_gaps(node_set<Real>& ns) {
    Real lo = std::numeric_limits<Real>::infinity();
    Real hi = Real(0);
    for (std::size_t k = 0; k + 1 < ns.xs.size(); ++k) {
        const Real gap = ns.xs[k + 1] - ns.xs[k];
        lo = std::min(lo, gap);
        hi = std::max(hi, gap);
    }
    ns.h = hi;
    ns.hstar = lo;
}

// Deterministic uniform draw on [-1, 1].  Maps the top 53 bits of the
// generator output by hand; the standard distributions are not pinned down by
// the standard, and node layouts must be reproducible bit-for-bit from a seed.
inline double unit_symmetric(std::uint64_t bits) {
    const double u01 = static_cast<double>(bits >> 11) * 0x1.0p-53;  // [0, 1)
    return 2.0 * u01 - 1.0;
}

}  // namespace detail

template <class Real = double>
node_set<Real> make_node_set(std::vector<Real> values) {
    if (values.size() < 2)
        throw std::invalid_argument("node_set: need at least two nodes");
    if (!all_finite(values.data(), values.size()))
        throw std::invalid_argument("node_set: nodes must be finite");
    for (std::size_t k = 0; k + 1 < values.size(); ++k)
        if (!(values[k] < values[k + 1]))
            throw std::invalid_argument("node_set: nodes must be strictly increasing");
    node_set<Real> ns;
    ns.a = values.front();
    ns.b = values.back();
    ns.xs = std::move(values);
    detail::set_gaps(ns);
    return ns;
}

template <class Real = double>
node_set<Real> make_equidistant(Real a, Real b, int n) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("make_equidistant: need finite a < b");
    if (n < 1) throw std::invalid_argument("make_equidistant: need n >= 1");
    std::vector<Real> xs(static_cast<std::size_t>(n) + 1);
    const Real len = b - a;
    for (int k = 0; k <= n; ++k) xs[k] = a + Real(k) * len / Real(n);
    xs.front() = a;  // endpoints exact, not just to roundoff
    xs.back() = b;
    return make_node_set(std::move(xs));
}

// Equidistant layout with each interior node displaced by an independent
// uniform draw scaled to beta * (b-a) / (2n).  beta < 1 keeps the ordering
// strict and caps the mesh ratio at (1+beta)/(1-beta).  Endpoints stay put.
template <class Real = double>
node_set<Real> make_perturbed(Real a, Real b, int n, Real beta, std::uint64_t seed) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("make_perturbed: need finite a < b");
    if (n < 1) throw std::invalid_argument("make_perturbed: need n >= 1");
    if (!(beta >= Real(0) && beta < Real(1)))
        throw std::invalid_argument("make_perturbed: need 0 <= beta < 1");
    std::mt19937_64 rng(seed);
    std::vector<Real> xs(static_cast<std::size_t>(n) + 1);
    const Real len = b - a;
    const Real amp = beta * len / (Real(2) * Real(n));
    xs.front() = a;
    xs.back() = b;
    for (int k = 1; k < n; ++k) {
        const Real u = static_cast<Real>(detail::unit_symmetric(rng()));
        xs[k] = a + Real(k) * len / Real(n) + u * amp;
    }
    return make_node_set(std::move(xs));
}

// Plain-text value list: one value per line, blank lines ignored.  Shared by
// the node-file and sample-file readers.
template <class Real = double>
std::vector<Real> read_values(std::istream& in, const char* what = "value file") {
    std::vector<Real> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        Real v;
        if (!(ls >> v)) {
            std::string rest;
            ls.clear();
            ls >> rest;
            if (rest.empty()) continue;  // blank line
            throw std::invalid_argument(std::string(what) + ": unparseable line " +
                                        std::to_string(lineno));
        }
        std::string trailing;
        if (ls >> trailing)
            throw std::invalid_argument(std::string(what) + ": trailing junk on line " +
                                        std::to_string(lineno));
        values.push_back(v);
    }
    return values;
}

template <class Real = double>
node_set<Real> read_node_set(std::istream& in) {
    return make_node_set(read_values<Real>(in, "node file"));
}

// Half-width of the "treat x as this node" zone used by every evaluator.
// Kept proportional to the interval scale so snapping survives affine maps.
template <class Real>
inline Real snap_tolerance(const node_set<Real>& ns) {
    const Real scale = std::max({std::abs(ns.a), std::abs(ns.b), Real(1)});
    return Real(16) * eps_of<Real> * scale;
}

// Index of the node x is snapped to, if any.  Ties between two equally near
// nodes go to the lower index.
template <class Real>
inline std::optional<int> snap_index(const node_set<Real>& ns, Real x) {
    const Real tol = snap_tolerance(ns);
    auto it = std::lower_bound(ns.xs.begin(), ns.xs.end(), x);
    int best = -1;
    Real best_dist = std::numeric_limits<Real>::infinity();
    auto consider = [&](int k) {
        if (k < 0 || k > ns.n()) return;
        const Real dist = std::abs(x - ns.xs[k]);
        if (dist < best_dist) {  // strict: earlier (lower) index wins ties
            best_dist = dist;
            best = k;
        }
    };
    const int at = static_cast<int>(it - ns.xs.begin());
    consider(at - 1);
    consider(at);
    if (best >= 0 && best_dist <= tol) return best;
    return std::nullopt;
}

}  // namespace gfh

#endif
