#pragma once

#include <string>

namespace jlx::numfmt {

// Deterministic 17-significant-digit rendering ("%.17g"); round-trips any
// finite double exactly.
std::string sig17(double v);

}  // namespace jlx::numfmt
