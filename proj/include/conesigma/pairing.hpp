#pragma once

#include "conesigma/numeric.hpp"

namespace conesigma {

struct PairPoint {
    Index first = 0;
    Index second = 0;
    friend bool operator==(const PairPoint&, const PairPoint&) = default;
};

// Cantor pairing, y-major: (x, y) -> (x+y)(x+y+1)/2 + y.
Index pairIndex(Index x, Index y);

// Inverse of pairIndex, via exact integer square root.
PairPoint unpairIndex(Index n);

} // namespace conesigma
