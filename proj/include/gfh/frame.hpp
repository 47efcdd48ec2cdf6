#ifndef GFH_FRAME_HPP
#define GFH_FRAME_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "gfh/common.hpp"
#include "gfh/local_poly.hpp"
#include "gfh/nodes.hpp"

namespace gfh {

// Family parameters: local polynomial degree d and blending exponent gamma.
// gamma == 1 reduces to the classical rational blend with x-independent
// barycentric weights; larger gamma sharpens the blend.
struct params {
    int d = 3;
    int gamma = 1;
};

// Nodes + parameters + per-window barycentric weights (the only node-derived
// table every engine wants).  Immutable after construction.
template <class Real = double>
class frame {
  public:
    frame(node_set<Real> nodes, params p) : nodes_(std::move(nodes)), p_(p) {
        if (p_.d < 0) throw std::invalid_argument("frame: d must be >= 0");
        if (p_.d > nodes_.n())
            throw std::invalid_argument("frame: d must be <= interval count n");
        if (p_.gamma < 1) throw std::invalid_argument("frame: gamma must be >= 1");
        const int nw = n_windows();
        wtab_.reserve(static_cast<std::size_t>(nw) * (p_.d + 1));
        logscale_.reserve(nw);
        for (int i = 0; i < nw; ++i) {
            scaled_weights<Real> sw = window_weights(nodes_, window{i, p_.d});
            wtab_.insert(wtab_.end(), sw.w.begin(), sw.w.end());
            logscale_.push_back(sw.logscale);
        }
    }

    const node_set<Real>& nodes() const { return nodes_; }
    const params& config() const { return p_; }
    int n() const { return nodes_.n(); }
    int d() const { return p_.d; }
    int gamma() const { return p_.gamma; }
    int n_windows() const { return nodes_.n() - p_.d + 1; }

    // Scaled barycentric weight of node k = i + j within window i.
    Real win_weight(int i, int j) const {
        return wtab_[static_cast<std::size_t>(i) * (p_.d + 1) + j];
    }
    // Row of d+1 scaled weights for window i (contiguous).
    const Real* win_weight_row(int i) const {
        return wtab_.data() + static_cast<std::size_t>(i) * (p_.d + 1);
    }
    Real win_logscale(int i) const { return logscale_[i]; }

    scaled_weights<Real> window_weights_of(int i) const {
        scaled_weights<Real> sw;
        sw.w.assign(wtab_.begin() + static_cast<std::size_t>(i) * (p_.d + 1),
                    wtab_.begin() + static_cast<std::size_t>(i + 1) * (p_.d + 1));
        sw.logscale = logscale_[i];
        return sw;
    }

  private:
    node_set<Real> nodes_;
    params p_;
    std::vector<Real> wtab_;      // n_windows x (d+1), row-major
    std::vector<Real> logscale_;  // one per window
};

}  // namespace gfh

#endif
