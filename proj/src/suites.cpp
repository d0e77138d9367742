#include "conesigma/suites.hpp"

#include "conesigma/hochschild.hpp"
#include "conesigma/pairing.hpp"
#include "conesigma/sigma.hpp"

#include <algorithm>
#include <sstream>

namespace conesigma {

namespace {

Index randBelow(Rng& rng, Index n) { return n == 0 ? 0 : rng() % n; }

ConeMat bandShift(CoeffPtr coeff, long long shift, std::vector<AlgElem> pattern) {
    auto values = pattern;
    values.push_back(coeff->zero());
    auto patternAt = [pattern](Index i) { return pattern[i % pattern.size()]; };
    auto valid = [shift](Index i) {
        return shift >= 0 || i >= static_cast<Index>(-shift);
    };
    return ConeMat::fromOracles(
        coeff,
        [coeff, patternAt, shift, valid](Index i, Index j) {
            if (valid(i) && j == i + shift) return patternAt(i);
            return coeff->zero();
        },
        [patternAt, shift, valid, coeff](Index i) {
            if (valid(i) && !coeff->isZero(patternAt(i)))
                return std::vector<Index>{i + shift};
            return std::vector<Index>{};
        },
        [patternAt, shift, coeff](Index j) {
            if (shift <= 0 || j >= static_cast<Index>(shift)) {
                Index i = j - shift;
                if (!coeff->isZero(patternAt(i))) return std::vector<Index>{i};
            }
            return std::vector<Index>{};
        },
        1, Cert::none(), values);
}

struct SuiteBuilder {
    SuiteReport report;

    void check(const std::string& name, Index window, bool pass,
               const std::string& detail = "") {
        report.checks.push_back({name, window, pass, detail});
    }
};

std::string showDims(const std::vector<std::size_t>& dims) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? "," : "") << dims[i];
    out << ")";
    return out.str();
}

// ---- pairing ----

SuiteReport pairingSuite() {
    SuiteBuilder b;
    b.report.suite = "pairing";

    bool unpairPair = true;
    for (Index n = 0; n < 1'000'000 && unpairPair; ++n) {
        PairPoint p = unpairIndex(n);
        if (pairIndex(p.first, p.second) != n) unpairPair = false;
    }
    b.check("pairIndex(unpairIndex(n)) = n on [0, 10^6)", 0, unpairPair);

    bool pairUnpair = true;
    for (Index x = 0; x < 1000 && pairUnpair; ++x)
        for (Index y = 0; y < 1000 && pairUnpair; ++y)
            if (unpairIndex(pairIndex(x, y)) != PairPoint{x, y}) pairUnpair = false;
    b.check("unpairIndex(pairIndex(x,y)) = (x,y) on [0, 1000)^2", 0, pairUnpair);

    std::vector<PairPoint> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    bool golden = true;
    for (Index n = 0; n < expected.size(); ++n)
        if (unpairIndex(n) != expected[n]) golden = false;
    b.check("theta(0..5) = (0,0),(1,0),(0,1),(2,0),(1,1),(0,2)", 0, golden);

    return b.report;
}

// ---- shift identities ----

SuiteReport shiftIdentitiesSuite(Index window) {
    SuiteBuilder b;
    b.report.suite = "shift-identities";
    for (const auto& ring : {CoeffRing::rationals(), CoeffRing::integersModP(5)}) {
        auto coeff = Coefficients::make(ring);
        auto [alpha, beta] = pairingShifts(coeff);
        ConeMat alphaT = coneTranspose(alpha), betaT = coneTranspose(beta);
        ConeMat id = coneIdentity(coeff);
        ConeMat zero = coneFromFinite(FinMat::zero(coeff));
        std::string tag = " over " + ring.name();
        b.check("alpha*alpha^T = I" + tag, window, eqOnWindow(coneMul(alpha, alphaT), id, window));
        b.check("beta*beta^T = I" + tag, window, eqOnWindow(coneMul(beta, betaT), id, window));
        b.check("beta*alpha^T = 0" + tag, window, eqOnWindow(coneMul(beta, alphaT), zero, window));
        b.check("alpha*beta^T = 0" + tag, window, eqOnWindow(coneMul(alpha, betaT), zero, window));
        b.check("alpha^T*alpha + beta^T*beta = I" + tag, window,
                eqOnWindow(coneAdd(coneMul(alphaT, alpha), coneMul(betaT, beta)), id, window));
    }
    return b.report;
}

// ---- W isomorphism & intertwining ----

ConeMat randomCone(Rng& rng, const CoeffPtr& coeff, bool lazy) {
    if (lazy) return randomBandedLazy(rng, coeff);
    return coneFromFinite(randomFinMat(rng, coeff, 16, 8));
}

SuiteReport wIsoSuite(std::uint64_t seed, Index window) {
    SuiteBuilder b;
    b.report.suite = "w-iso";
    auto coeff = Coefficients::make(CoeffRing::rationals());
    auto [alpha, beta] = pairingShifts(coeff);
    Rng rng(seed);

    std::size_t leftFail = 0, rightFail = 0;
    auto intertwine = [&](const ConeMat& a) {
        ConeMat phiA = phiMap(a);
        if (!eqOnWindow(coneMul(a, alpha), coneMul(alpha, phiA), window)) ++leftFail;
        if (!eqOnWindow(coneMul(phiA, beta), coneMul(beta, phiA), window)) ++rightFail;
    };
    for (int t = 0; t < 100; ++t) intertwine(randomCone(rng, coeff, false));
    for (int t = 0; t < 20; ++t) intertwine(randomCone(rng, coeff, true));
    b.check("A*alpha = alpha*phi(A), 100 finite + 20 lazy", window, leftFail == 0,
            leftFail ? std::to_string(leftFail) + " failures" : "");
    b.check("phi(A)*beta = beta*phi(A), 100 finite + 20 lazy", window, rightFail == 0,
            rightFail ? std::to_string(rightFail) + " failures" : "");

    std::size_t backFwdFail = 0;
    for (int t = 0; t < 50; ++t) {
        ConeMat a = randomCone(rng, coeff, t % 5 == 0);
        WElement w{randomCone(rng, coeff, t % 7 == 0)};
        auto [a2, w2] = wIsoBackward(wIsoForward(a, w));
        if (!eqOnWindow(a2, a, window) || !eqOnWindow(w2.underlying, w.underlying, window))
            ++backFwdFail;
    }
    b.check("wIsoBackward . wIsoForward = id, 50 pairs", window, backFwdFail == 0);

    std::size_t fwdBackFail = 0;
    for (int t = 0; t < 50; ++t) {
        WElement c{randomCone(rng, coeff, t % 4 == 0)};
        auto [a, w] = wIsoBackward(c);
        if (!eqOnWindow(wIsoForward(a, w).underlying, c.underlying, window)) ++fwdBackFail;
    }
    b.check("wIsoForward . wIsoBackward = id, 50 elements", window, fwdBackFail == 0);

    std::size_t moduleFail = 0;
    for (int t = 0; t < 50; ++t) {
        ConeMat a = randomCone(rng, coeff, false);
        WElement w{randomCone(rng, coeff, t % 6 == 0)};
        ConeMat c = randomCone(rng, coeff, t % 5 == 1);
        WElement lhs = wIsoForward(coneMul(a, c), rightWAction(w, c));
        WElement rhs = rightWAction(wIsoForward(a, w), c);
        if (!eqOnWindow(lhs.underlying, rhs.underlying, window)) ++moduleFail;
    }
    b.check("wIsoForward((A,B).C) = wIsoForward(A,B)*C, 50 triples", window, moduleFail == 0);

    return b.report;
}

// ---- Ore witnesses and localization vs quotient ----

Fraction randomFraction(Rng& rng, const CoeffPtr& coeff) {
    Index denom = randBelow(rng, 9);
    ConeMat numer = coneFromFinite(randomFinMat(rng, coeff, 12, 6));
    if (rng() % 2) {
        AlgElem c = randomScalar(rng, *coeff);
        numer = coneAdd(numer, coneScale(c, iBar(coeff, randBelow(rng, 6))));
    }
    return Fraction{denom, std::move(numer)};
}

SuiteReport oreSuite(std::uint64_t seed, Index window) {
    SuiteBuilder b;
    b.report.suite = "ore";
    auto coeff = Coefficients::make(CoeffRing::rationals());
    Rng rng(seed);

    std::size_t moveFail = 0;
    for (int t = 0; t < 200; ++t) {
        Index n = randBelow(rng, 17);
        ConeMat e = randomCone(rng, coeff, t % 3 == 0);
        try {
            OreMove w = oreMoveWitness(n, e);
            Index span = std::max({window, w.m, n});
            if (!eqOnWindow(coneMul(w.eprime, iBar(coeff, n)),
                            coneMul(iBar(coeff, w.m), e), span))
                ++moveFail;
        } catch (const std::exception&) {
            ++moveFail;
        }
    }
    b.check("oreMoveWitness: E'*Ibar(n) = Ibar(m)*E, 200 samples", window, moveFail == 0);

    {
        ConeMat e = randomCone(rng, coeff, false);
        OreMove w = oreMoveWitness(0, e);
        b.check("oreMoveWitness(0, E) = (0, E)", window,
                w.m == 0 && eqOnWindow(w.eprime, e, window));
    }

    std::size_t annFail = 0;
    for (int t = 0; t < 100; ++t) {
        Index n = 1 + randBelow(rng, 16);
        FinMat f(coeff);
        std::size_t count = 1 + randBelow(rng, 5);
        for (std::size_t s = 0; s < count; ++s)
            f.set(randBelow(rng, 64), randBelow(rng, n), randomScalar(rng, *coeff));
        Index m = oreAnnWitness(n, coneFromFinite(f));
        FinMat killed = materializeFinite(coneMul(iBar(coeff, m), coneFromFinite(f)));
        if (!killed.isZero()) ++annFail;
        if (f.bound() > 0 && m == 0) ++annFail;
    }
    b.check("oreAnnWitness: Ibar(m)*E = 0 exactly, 100 samples", window, annFail == 0);
    b.check("oreAnnWitness(n, 0) = 0", window,
            oreAnnWitness(3, coneFromFinite(FinMat::zero(coeff))) == 0);

    {
        bool closed = true;
        for (Index n = 0; n <= 8 && closed; ++n)
            for (Index m = 0; m <= 8 && closed; ++m)
                if (!eqOnWindow(coneMul(iBar(coeff, n), iBar(coeff, m)),
                                iBar(coeff, std::max(n, m)), window))
                    closed = false;
        b.check("Ibar(n)*Ibar(m) = Ibar(max(n,m)), n,m <= 8", window, closed);
    }

    std::size_t homFail = 0;
    for (int t = 0; t < 100; ++t) {
        Fraction f = randomFraction(rng, coeff), g = randomFraction(rng, coeff);
        Verdict prod = sigmaEq(fracToSigma(fracMul(f, g)),
                               sigmaMul(fracToSigma(f), fracToSigma(g)), window);
        Verdict sum = sigmaEq(fracToSigma(fracAdd(f, g)),
                              sigmaAdd(fracToSigma(f), fracToSigma(g)), window);
        if (prod.kind != Verdict::Kind::EqualCertified) ++homFail;
        if (sum.kind != Verdict::Kind::EqualCertified) ++homFail;
    }
    b.check("fracToSigma preserves products and sums, 100 pairs, certified", window,
            homFail == 0);

    std::size_t unitFail = 0;
    SigmaClass one{coneIdentity(coeff)};
    for (Index n = 0; n <= 32; ++n)
        if (sigmaEq(SigmaClass{iBar(coeff, n)}, one, window).kind !=
            Verdict::Kind::EqualCertified)
            ++unitFail;
    b.check("Ibar(n) maps to the identity class, n <= 32", window, unitFail == 0);

    std::size_t roundtripFail = 0;
    for (int t = 0; t < 100; ++t) {
        Fraction f = randomFraction(rng, coeff);
        Verdict v = fracEq(f, sigmaToFrac(fracToSigma(f)), window);
        if (v.kind != Verdict::Kind::EqualCertified) ++roundtripFail;
    }
    b.check("fracToSigma / sigmaToFrac roundtrip, 100 fractions", window, roundtripFail == 0);

    return b.report;
}

// ---- local units ----

SuiteReport localUnitsSuite(std::uint64_t seed, Index window) {
    SuiteBuilder b;
    b.report.suite = "local-units";
    auto coeff = Coefficients::make(CoeffRing::rationals());
    Rng rng(seed);
    std::size_t fail = 0;
    for (int t = 0; t < 100; ++t) {
        std::vector<FinMat> family;
        std::size_t count = 1 + randBelow(rng, 8);
        for (std::size_t s = 0; s < count; ++s)
            family.push_back(randomFinMat(rng, coeff, 64, 6));
        Index m = localUnit(family);
        FinMat im = FinMat::diagonal(coeff, m);
        if (!(im.mul(im) == im)) ++fail;
        for (const auto& f : family)
            if (!(im.mul(f) == f) || !(f.mul(im) == f)) ++fail;
    }
    b.check("localUnit absorbs 100 random families (<= 8 elems, indices < 64)", window,
            fail == 0);
    return b.report;
}

// ---- Hochschild Morita shadow ----

SuiteReport moritaHHSuite() {
    SuiteBuilder b;
    b.report.suite = "morita-hh";

    auto q = moritaCompare(groundAlgebra(CoeffRing::rationals()), 2, 2);
    b.check("HH(Q, 2) = HH(M2(Q), 2) = (1,0,0)", 0,
            q.equal && q.dimsA == std::vector<std::size_t>{1, 0, 0},
            showDims(q.dimsA) + " vs " + showDims(q.dimsMatrix));

    auto z7 = moritaCompare(groundAlgebra(CoeffRing::integersModP(7)), 2, 2);
    b.check("HH(Z/7, 2) = HH(M2(Z/7), 2) = (1,0,0)", 0,
            z7.equal && z7.dimsA == std::vector<std::size_t>{1, 0, 0},
            showDims(z7.dimsA) + " vs " + showDims(z7.dimsMatrix));

    auto dual = hhDims(dualNumbersSpec(CoeffRing::rationals()), 3);
    b.check("HH(Q[x]/(x^2), 3) = (2,1,1,1)", 0,
            dual.dims == std::vector<std::size_t>{2, 1, 1, 1}, showDims(dual.dims));

    return b.report;
}

} // namespace

AlgElem randomScalar(Rng& rng, const Coefficients& coeff) {
    const CoeffRing& ring = coeff.base();
    Rational v;
    switch (ring.kind()) {
        case CoeffRing::Kind::Rationals: {
            long long num = static_cast<long long>(randBelow(rng, 11)) - 5;
            long long den = 1 + static_cast<long long>(randBelow(rng, 3));
            v = Rational(num, den);
            break;
        }
        case CoeffRing::Kind::Integers:
            v = Rational(static_cast<long long>(randBelow(rng, 11)) - 5);
            break;
        case CoeffRing::Kind::IntegersModP:
            v = Rational(static_cast<long long>(randBelow(rng, ring.modulus())));
            break;
    }
    if (!coeff.isAlgebra()) return AlgElem{{ring.normalize(v)}};
    AlgElem e = coeff.zero();
    e.coords[randBelow(rng, e.coords.size())] = ring.normalize(v);
    return e;
}

FinMat randomFinMat(Rng& rng, CoeffPtr coeff, Index maxIndex, std::size_t maxEntries) {
    FinMat m(coeff);
    std::size_t count = randBelow(rng, maxEntries + 1);
    for (std::size_t s = 0; s < count; ++s)
        m.set(randBelow(rng, maxIndex), randBelow(rng, maxIndex), randomScalar(rng, *coeff));
    return m;
}

ConeMat randomBandedLazy(Rng& rng, CoeffPtr coeff) {
    std::size_t bands = 1 + randBelow(rng, 3);
    std::optional<ConeMat> acc;
    for (std::size_t s = 0; s < bands; ++s) {
        long long shift = static_cast<long long>(randBelow(rng, 7)) - 3;
        std::vector<AlgElem> pattern(1 + randBelow(rng, 4));
        for (auto& p : pattern) p = randomScalar(rng, *coeff);
        ConeMat band = bandShift(coeff, shift, std::move(pattern));
        acc = acc ? coneAdd(*acc, band) : band;
    }
    if (rng() % 2) acc = coneAdd(*acc, coneFromFinite(randomFinMat(rng, coeff, 10, 4)));
    return *acc;
}

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names{
        "pairing", "shift-identities", "w-iso", "ore", "local-units", "morita-hh", "all"};
    return names;
}

SuiteReport runSuite(const std::string& name, std::uint64_t seed, Index window) {
    if (name == "pairing") return pairingSuite();
    if (name == "shift-identities") return shiftIdentitiesSuite(window);
    if (name == "w-iso") return wIsoSuite(seed, window);
    if (name == "ore") return oreSuite(seed, window);
    if (name == "local-units") return localUnitsSuite(seed, window);
    if (name == "morita-hh") return moritaHHSuite();
    if (name == "all") {
        SuiteReport all;
        all.suite = "all";
        for (const auto& sub : suiteNames()) {
            if (sub == "all") continue;
            SuiteReport r = runSuite(sub, seed, window);
            for (auto& c : r.checks) {
                c.name = r.suite + ": " + c.name;
                all.checks.push_back(std::move(c));
            }
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace conesigma
