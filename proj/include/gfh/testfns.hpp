#ifndef GFH_TESTFNS_HPP
#define GFH_TESTFNS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfh {

// Named one-dimensional test functions with just enough smoothness metadata
// to predict convergence exponents.  A function of class C^{s,alpha} (s full
// derivatives, last one Holder-alpha; Lipschitz cases are s = 0) approximated
// with degree-d windows converges like n^{-min(s+alpha, d+1)} once the
// blending exponent clears s+alpha+1; below that threshold the proven
// exponent drops to gamma-1.  Analytic (and piecewise-analytic, away from the
// break) entries converge at the full n^{-(d+1)}.
enum class smoothness_class { holder, analytic, piecewise_analytic };

struct test_function {
    std::string name;
    double (*f)(double) = nullptr;
    smoothness_class cls = smoothness_class::analytic;
    double s = 0;      // full derivatives (holder entries)
    double alpha = 0;  // Holder exponent of the last derivative

    // Predicted max-error exponent for a doubling study at parameters (d,
    // gamma).  gamma == 1 is outside the proven range; the catalog returns
    // the observed exponent min(s+alpha, d+1) there.
    double expected_rate(int d, int gamma) const {
        const double full = double(d) + 1;
        if (cls != smoothness_class::holder) return full;
        const double sa = s + alpha;
        if (gamma == 1) return std::min(sa, full);
        if (double(gamma) > sa + 1) return std::min(sa, full);
        // log factor at gamma == s+alpha+1 absorbed into the band
        return std::min({double(gamma) - 1, sa, full});
    }
};

namespace detail {

inline double fn_sqrt_abs(double x) { return std::sqrt(std::abs(x)); }
inline double fn_abs(double x) { return std::abs(x); }
inline double fn_gauss(double x) { return std::exp(-x * x); }
inline double fn_runge(double x) { return 1.0 / (1.0 + 25.0 * x * x); }
inline double fn_jump(double x) {
    const double s = (x > 0) - (x < 0);
    return s / (1.0 + 25.0 * x * x);
}

}  // namespace detail

inline const std::vector<test_function>& test_function_catalog() {
    static const std::vector<test_function> catalog = {
        {"sqrt_abs", &detail::fn_sqrt_abs, smoothness_class::holder, 0, 0.5},
        {"abs", &detail::fn_abs, smoothness_class::holder, 0, 1.0},
        {"gauss", &detail::fn_gauss, smoothness_class::analytic, 0, 0},
        {"runge", &detail::fn_runge, smoothness_class::analytic, 0, 0},
        {"jump", &detail::fn_jump, smoothness_class::piecewise_analytic, 0, 0},
    };
    return catalog;
}

inline const test_function& find_test_function(const std::string& name) {
    for (const test_function& tf : test_function_catalog())
        if (tf.name == name) return tf;
    std::string known;
    for (const test_function& tf : test_function_catalog())
        known += (known.empty() ? "" : ", ") + tf.name;
    throw std::invalid_argument("unknown test function '" + name +
                                "' (known: " + known + ")");
}

}  // namespace gfh

#endif
