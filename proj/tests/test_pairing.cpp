#include "conesigma/pairing.hpp"

#include <doctest.h>

using namespace conesigma;

namespace {

// Independent oracle: enumerate anti-diagonals in the y-major order and
// record where each lattice point lands.
std::vector<PairPoint> enumerateAntiDiagonals(Index count) {
    std::vector<PairPoint> out;
    for (Index diag = 0; out.size() < count; ++diag)
        for (Index y = 0; y <= diag && out.size() < count; ++y)
            out.push_back(PairPoint{diag - y, y});
    return out;
}

} // namespace

TEST_CASE("pairIndex matches the anti-diagonal enumeration") {
    auto points = enumerateAntiDiagonals(256);
    for (Index n = 0; n < points.size(); ++n) {
        CHECK(pairIndex(points[n].first, points[n].second) == n);
        CHECK(unpairIndex(n) == points[n]);
    }
}

TEST_CASE("pairIndex examples") {
    CHECK(pairIndex(0, 0) == 0);
    CHECK(pairIndex(1, 0) == 1);
    CHECK(pairIndex(0, 2) == 5);
}

TEST_CASE("unpairIndex examples") {
    CHECK(unpairIndex(0) == PairPoint{0, 0});
    CHECK(unpairIndex(4) == PairPoint{1, 1});
    CHECK(unpairIndex(9) == PairPoint{0, 3});
}

TEST_CASE("pair/unpair roundtrips") {
    for (Index n = 0; n < 100'000; ++n) {
        PairPoint p = unpairIndex(n);
        CHECK(pairIndex(p.first, p.second) == n);
    }
    for (Index x = 0; x < 200; ++x)
        for (Index y = 0; y < 200; ++y)
            CHECK(unpairIndex(pairIndex(x, y)) == PairPoint{x, y});
}
