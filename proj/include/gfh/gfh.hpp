#ifndef GFH_GFH_HPP
#define GFH_GFH_HPP

// Umbrella header: rational blends of local polynomials with a tunable
// blending exponent, their evaluation engines, and the study harness.

#include "gfh/analysis.hpp"
#include "gfh/common.hpp"
#include "gfh/dd.hpp"
#include "gfh/format.hpp"
#include "gfh/frame.hpp"
#include "gfh/interpolant.hpp"
#include "gfh/local_poly.hpp"
#include "gfh/nodes.hpp"
#include "gfh/signed_log.hpp"
#include "gfh/testfns.hpp"

#endif
