#ifndef GFH_COMMON_HPP
#define GFH_COMMON_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gfh {

// Thrown when a quantity the theory guarantees (e.g. a positive blend
// denominator) comes out non-positive or non-finite at runtime.  Callers that
// map errors to process exit codes treat this class specially.
struct numeric_contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class Real>
constexpr Real eps_of = std::numeric_limits<Real>::epsilon();

// Integer power by repeated multiplication; exponents here are tiny (the
// blending exponent and friends), so no square-and-multiply needed.
template <class Real>
inline Real ipow(Real base, int e) {
    Real r = Real(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// (-1)^e for possibly large integer e.
inline int parity_sign(long long e) { return (e & 1LL) ? -1 : 1; }

template <class Real>
inline bool all_finite(const Real* p, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i)
        if (!std::isfinite(p[i])) return false;
    return true;
}

}  // namespace gfh

#endif
