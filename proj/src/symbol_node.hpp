#pragma once

// Internal node layout behind the Symbol value type. Shared between the
// symbol implementation and the inverse-chain code; not part of the public
// surface.

#include "apxnum/symbols.hpp"

namespace apx {

struct SymNode {
    SymbolKind kind{};
    cdouble p1{};             // shrink c, affine a, mobius a, blaschke a, conjugated base point
    cdouble p2{};             // affine b, conjugated image phi(a)
    double theta = 0.0;       // lens exponent
    int m = 0;                // blaschke power
    std::vector<Symbol> sub;  // conjugated inner (size 1) or composed parts
};

} // namespace apx
