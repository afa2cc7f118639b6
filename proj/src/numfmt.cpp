#include "jlx/numfmt.hpp"

#include <cstdio>

namespace jlx::numfmt {

std::string sig17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace jlx::numfmt
