#include "conesigma/finmat.hpp"
#include "conesigma/suites.hpp"

#include <doctest.h>

using namespace conesigma;

namespace {

CoeffPtr Q() {
    static CoeffPtr coeff = Coefficients::make(CoeffRing::rationals());
    return coeff;
}

} // namespace

TEST_CASE("matrix unit products") {
    auto q = Q();
    CHECK(FinMat::unit(q, 0, 1).mul(FinMat::unit(q, 1, 2)) == FinMat::unit(q, 0, 2));
    CHECK(FinMat::unit(q, 0, 1).mul(FinMat::unit(q, 2, 2)).isZero());
    CHECK(FinMat::diagonal(q, 3).mul(FinMat::unit(q, 1, 1)) == FinMat::unit(q, 1, 1));
}

TEST_CASE("localUnit") {
    auto q = Q();
    CHECK(localUnit({FinMat::unit(q, 0, 1), FinMat::unit(q, 2, 2)}) == 3);
    CHECK(localUnit({FinMat::zero(q)}) == 0);
    CHECK(localUnit({FinMat::diagonal(q, 5)}) == 5);
    CHECK_THROWS_AS(localUnit({}), std::invalid_argument);
}

TEST_CASE("idemHom membership in u*Mat*v") {
    auto q = Q();
    IdemObject e00(FinMat::unit(q, 0, 0));
    IdemObject e11(FinMat::unit(q, 1, 1));
    CHECK(idemHom(e00, FinMat::unit(q, 0, 0), e00));
    CHECK(idemHom(e00, FinMat::unit(q, 0, 1), e11));
    CHECK_FALSE(idemHom(e00, FinMat::unit(q, 1, 0), e00));
    CHECK_THROWS_AS(IdemObject(FinMat::unit(q, 0, 1)), std::invalid_argument);
}

TEST_CASE("hom composition is associative") {
    auto q = Q();
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        FinMat a = randomFinMat(rng, q, 6, 5);
        FinMat b = randomFinMat(rng, q, 6, 5);
        FinMat c = randomFinMat(rng, q, 6, 5);
        CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));
    }
}

TEST_CASE("unitIsoPair exhibits the isomorphism and its endomorphism ring") {
    auto q = Q();

    SUBCASE("n = 0") {
        auto [f, g] = unitIsoPair(q, 0);
        CHECK(f == FinMat::unit(q, 0, 0));
        CHECK(f.mul(g) == FinMat::unit(q, 0, 0));
        CHECK(g.mul(f) == FinMat::unit(q, 0, 0));
    }
    SUBCASE("n = 3") {
        auto [f, g] = unitIsoPair(q, 3);
        CHECK(f.mul(g) == FinMat::unit(q, 0, 0));
        CHECK(g.mul(f) == FinMat::unit(q, 3, 3));
    }
    SUBCASE("endomorphisms of the corner idempotent are scalar") {
        IdemObject e00(FinMat::unit(q, 0, 0));
        Rng rng(5);
        for (int t = 0; t < 50; ++t) {
            FinMat f = randomFinMat(rng, q, 5, 6);
            if (!idemHom(e00, f, e00)) continue;
            // f = e00*f*e00 is supported on the single corner cell
            FinMat scalar = FinMat::unit(q, 0, 0).scale(f.get(0, 0));
            CHECK(f == scalar);
        }
        FinMat corner = e00.u.mul(randomFinMat(rng, q, 5, 6)).mul(e00.u);
        CHECK(idemHom(e00, corner, e00));
        CHECK(corner == FinMat::unit(q, 0, 0).scale(corner.get(0, 0)));
    }
}

TEST_CASE("unitDecompose splits through the diagonal idempotents") {
    auto q = Q();
    FinMat f = FinMat::unit(q, 0, 0).add(FinMat::unit(q, 0, 1));
    auto parts = unitDecompose(f, 2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == FinMat::unit(q, 0, 0));
    CHECK(parts[1] == FinMat::unit(q, 0, 1));

    auto zeros = unitDecompose(FinMat::zero(q), 3);
    for (const auto& p : zeros) CHECK(p.isZero());

    auto diag = unitDecompose(FinMat::diagonal(q, 3), 3);
    for (Index t = 0; t < 3; ++t) CHECK(diag[t] == FinMat::unit(q, t, t));

    CHECK_THROWS_AS(unitDecompose(FinMat::unit(q, 0, 5), 2), std::invalid_argument);
}

TEST_CASE("ring axioms and transpose anti-isomorphism on random triples") {
    auto q = Q();
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
        FinMat a = randomFinMat(rng, q, 8, 6);
        FinMat b = randomFinMat(rng, q, 8, 6);
        FinMat c = randomFinMat(rng, q, 8, 6);
        CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
        CHECK(a.add(b).mul(c) == a.mul(c).add(b.mul(c)));
        CHECK(a.mul(b).transpose() == b.transpose().mul(a.transpose()));
    }
}

TEST_CASE("unitDecompose sum reassembles f") {
    auto q = Q();
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        FinMat f = randomFinMat(rng, q, 6, 6);
        Index m = f.bound();
        auto parts = unitDecompose(f, m);
        FinMat sum = FinMat::zero(q);
        for (const auto& p : parts) sum = sum.add(p);
        CHECK(sum == f);
    }
}

TEST_CASE("coefficient mismatch is rejected") {
    auto q = Q();
    auto z5 = Coefficients::make(CoeffRing::integersModP(5));
    CHECK_THROWS_AS(FinMat::unit(q, 0, 0).mul(FinMat::unit(z5, 0, 0)), CoefficientMismatch);
}
