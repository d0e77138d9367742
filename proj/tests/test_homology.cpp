#include "conesigma/homology.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace conesigma;

namespace {

DenseMat mat(std::size_t r, std::size_t c, std::vector<Rational> vals) {
    DenseMat m(r, c);
    m.a = std::move(vals);
    return m;
}

// Independent rank oracle: largest k with a nonsingular k x k minor,
// determinants by cofactor expansion. Only viable for tiny matrices.
Rational minorDet(const DenseMat& m, std::vector<std::size_t> rows,
                  std::vector<std::size_t> cols) {
    if (rows.empty()) return Rational(1);
    Rational det = 0;
    int sign = 1;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        auto subRows = std::vector<std::size_t>(rows.begin() + 1, rows.end());
        auto subCols = cols;
        subCols.erase(subCols.begin() + static_cast<long>(t));
        det += Rational(sign) * m.at(rows[0], cols[t]) * minorDet(m, subRows, subCols);
        sign = -sign;
    }
    return det;
}

std::size_t rankByMinors(const DenseMat& m) {
    std::size_t best = 0;
    std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t k = 1; k <= n; ++k) {
        // all k-subsets of rows and columns
        std::vector<std::size_t> rowSel(k), colSel(k);
        bool found = false;
        std::function<void(std::size_t, std::size_t)> pickRows = [&](std::size_t start,
                                                                     std::size_t depth) {
            if (found) return;
            if (depth == k) {
                std::function<void(std::size_t, std::size_t)> pickCols =
                    [&](std::size_t cstart, std::size_t cdepth) {
                        if (found) return;
                        if (cdepth == k) {
                            if (minorDet(m, rowSel, colSel) != 0) found = true;
                            return;
                        }
                        for (std::size_t c = cstart; c < m.cols; ++c) {
                            colSel[cdepth] = c;
                            pickCols(c + 1, cdepth + 1);
                        }
                    };
                pickCols(0, 0);
                return;
            }
            for (std::size_t r = start; r < m.rows; ++r) {
                rowSel[depth] = r;
                pickRows(r + 1, depth + 1);
            }
        };
        pickRows(0, 0);
        if (found) best = k;
    }
    return best;
}

} // namespace

TEST_CASE("rankOverField") {
    auto q = CoeffRing::rationals();
    CHECK(rankOverField(mat(2, 2, {1, 2, 2, 4}), q) == 1);
    CHECK(rankOverField(mat(2, 2, {Rational(1, 2), 0, 0, Rational(1, 3)}), q) == 2);
    CHECK(rankOverField(DenseMat(3, 3), q) == 0);
    // rank depends on the field: [[2,0],[0,2]] has rank 2 over Q, 0 over Z/2
    DenseMat two = mat(2, 2, {2, 0, 0, 2});
    CHECK(rankOverField(two, q) == 2);
    CHECK(rankOverField(two, CoeffRing::integersModP(2)) == 0);
    CHECK(rankOverField(two, CoeffRing::integersModP(5)) == 2);
}

TEST_CASE("rankOverField agrees with the minor-based oracle") {
    std::mt19937_64 rng(77);
    auto q = CoeffRing::rationals();
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        DenseMat m(r, c);
        for (auto& v : m.a) v = Rational(static_cast<long>(rng() % 7) - 3,
                                         static_cast<long>(1 + rng() % 3));
        CHECK(rankOverField(m, q) == rankByMinors(m));
    }
}

TEST_CASE("smithNormalForm") {
    CHECK(smithNormalForm(mat(2, 2, {2, 4, 6, 8})) == std::vector<Int>{2, 4});
    CHECK(smithNormalForm(mat(2, 3, {1, 0, 0, 0, 1, 0})) == std::vector<Int>{1, 1});
    CHECK(smithNormalForm(DenseMat(2, 2)).empty());
    CHECK(smithNormalForm(mat(1, 1, {-6})) == std::vector<Int>{6});
    // divisibility chain holds on random integer matrices
    std::mt19937_64 rng(79);
    for (int t = 0; t < 30; ++t) {
        DenseMat m(1 + rng() % 4, 1 + rng() % 4);
        for (auto& v : m.a) v = Rational(static_cast<long>(rng() % 13) - 6);
        auto d = smithNormalForm(m);
        for (std::size_t k = 0; k + 1 < d.size(); ++k) {
            CHECK(d[k] > 0);
            CHECK(d[k + 1] % d[k] == 0);
        }
        CHECK(d.size() == rankOverField(m, CoeffRing::rationals()));
    }
}

TEST_CASE("verifyComplex") {
    auto q = CoeffRing::rationals();
    SUBCASE("a valid two-step complex passes") {
        // C0 <- C1 <- C2 with d1 = [1 -1], d2 = [[1],[1]]
        ChainComplexSpec c = makeChainComplex(
            q, {1, 2, 1}, {mat(1, 2, {1, -1}), mat(2, 1, {1, 1})});
        CHECK(verifyComplex(c).pass);
    }
    SUBCASE("d.d != 0 is caught at the right degree") {
        ChainComplexSpec bad;
        bad.coeff = q;
        bad.dims = {1, 2, 1};
        bad.differentials = {mat(1, 2, {1, -1}), mat(2, 1, {1, 2})};
        auto report = verifyComplex(bad);
        CHECK_FALSE(report.pass);
        CHECK(report.message.find("1") != std::string::npos);
        CHECK_THROWS_AS(makeChainComplex(q, bad.dims, bad.differentials),
                        std::invalid_argument);
    }
    SUBCASE("shape mismatch is rejected") {
        ChainComplexSpec bad;
        bad.coeff = q;
        bad.dims = {2, 2};
        bad.differentials = {mat(1, 2, {0, 0})};
        CHECK_FALSE(verifyComplex(bad).pass);
    }
}

TEST_CASE("homologyDims by rank-nullity") {
    auto q = CoeffRing::rationals();
    // circle-like complex: C0 = Q^2, C1 = Q^2, d1 = [[1,-1],[-1,1]]
    ChainComplexSpec c = makeChainComplex(q, {2, 2}, {mat(2, 2, {1, -1, -1, 1})});
    auto h = homologyDims(c);
    REQUIRE(h.size() == 2);
    CHECK(h[0] == 1);
    CHECK(h[1] == 1);

    // exact complex: 0 <- Q <- Q^2 <- Q <- 0 with d1 = [1 0], d2 = [[0],[1]]
    ChainComplexSpec ex = makeChainComplex(
        q, {1, 2, 1}, {mat(1, 2, {1, 0}), mat(2, 1, {0, 1})});
    auto he = homologyDims(ex);
    CHECK(he == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("Euler characteristic matches alternating homology sum") {
    auto q = CoeffRing::rationals();
    std::mt19937_64 rng(83);
    for (int t = 0; t < 10; ++t) {
        // arbitrary d1 with d2 = 0 always chains
        std::size_t n0 = 1 + rng() % 3, n1 = 1 + rng() % 3, n2 = 1 + rng() % 3;
        DenseMat d1(n0, n1);
        for (auto& v : d1.a) v = Rational(static_cast<long>(rng() % 5) - 2);
        DenseMat d2(n1, n2); // zero
        ChainComplexSpec c = makeChainComplex(q, {n0, n1, n2}, {d1, d2});
        auto h = homologyDims(c);
        long lhs = static_cast<long>(n0) - static_cast<long>(n1) + static_cast<long>(n2);
        long rhs = static_cast<long>(h[0]) - static_cast<long>(h[1]) + static_cast<long>(h[2]);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("integral homology sees torsion") {
    auto z = CoeffRing::integers();
    // 0 <- Z <- Z with d1 = [2]: H0 = Z/2, H1 = 0
    ChainComplexSpec c = makeChainComplex(z, {1, 1}, {mat(1, 1, {2})});
    auto groups = homologyGroupsZ(c);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0] == HomologyGroup{0, {2}});
    CHECK(groups[1] == HomologyGroup{0, {}});

    // free case: zero differential
    ChainComplexSpec f = makeChainComplex(z, {2, 1}, {DenseMat(2, 1)});
    auto gf = homologyGroupsZ(f);
    CHECK(gf[0] == HomologyGroup{2, {}});
    CHECK(gf[1] == HomologyGroup{1, {}});
}

TEST_CASE("denseMul over rings") {
    auto q = CoeffRing::rationals();
    DenseMat a = mat(2, 2, {Rational(1, 2), 1, 0, 1});
    DenseMat b = mat(2, 2, {2, 0, 1, 1});
    DenseMat ab = denseMul(a, b, q);
    CHECK(ab == mat(2, 2, {2, 1, 1, 1}));
    auto z3 = CoeffRing::integersModP(3);
    DenseMat c = mat(1, 1, {2});
    CHECK(denseMul(c, c, z3) == mat(1, 1, {1}));
}
