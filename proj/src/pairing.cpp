#include "conesigma/pairing.hpp"

namespace conesigma {

namespace {

using U128 = unsigned __int128;

// floor(sqrt(v)) by Newton iteration on 128-bit integers.
U128 isqrt128(U128 v) {
    if (v < 2) return v;
    U128 x = v, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + v / x) / 2;
    }
    return x;
}

} // namespace

Index pairIndex(Index x, Index y) {
    U128 s = U128(x) + U128(y);
    U128 n = s * (s + 1) / 2 + y;
    if (n > U128(~Index(0))) throw std::overflow_error("pairIndex: index overflow");
    return static_cast<Index>(n);
}

PairPoint unpairIndex(Index n) {
    U128 w = (isqrt128(8 * U128(n) + 1) - 1) / 2;
    U128 t = w * (w + 1) / 2;
    Index y = static_cast<Index>(U128(n) - t);
    Index x = static_cast<Index>(w) - y;
    return PairPoint{x, y};
}

} // namespace conesigma
