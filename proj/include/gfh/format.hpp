#ifndef GFH_FORMAT_HPP
#define GFH_FORMAT_HPP

#include <cstdio>
#include <string>

namespace gfh {

// Reals in CSV output carry 17 significant digits: enough to round-trip a
// double exactly, and stable across runs for byte-identical files.
inline std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace gfh

#endif
