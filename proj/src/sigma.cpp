#include "conesigma/sigma.hpp"

#include <algorithm>

namespace conesigma {

Verdict sigmaEq(const SigmaClass& a, const SigmaClass& b, Index window) {
    requireSame(*a.rep.coeff(), *b.rep.coeff());
    ConeMat d = coneSub(a.rep, b.rep);
    Verdict v;
    if (d.cert().kind == Cert::Kind::Finite) {
        v.kind = Verdict::Kind::EqualCertified;
        v.bound = d.cert().bound;
        v.evidence = materializeFinite(d);
        return v;
    }
    v.kind = Verdict::Kind::Unknown;
    v.report = eqOnWindowReport(a.rep, b.rep, window);
    return v;
}

SigmaClass sigmaAdd(const SigmaClass& a, const SigmaClass& b) {
    return SigmaClass{coneAdd(a.rep, b.rep)};
}

SigmaClass sigmaMul(const SigmaClass& a, const SigmaClass& b) {
    return SigmaClass{coneMul(a.rep, b.rep)};
}

OreMove oreMoveWitness(Index n, const ConeMat& e) {
    auto coeff = e.coeff();
    Index m = n;
    for (Index j = 0; j < n; ++j)
        for (Index i : e.colSupport(j)) m = std::max(m, i + 1);
    ConeMat eprime = coneMul(iBar(coeff, m), e);

    // E' * iBar(n) and iBar(m) * E agree by construction outside columns
    // < n; verify those columns on every row either side could touch.
    ConeMat lhs = coneMul(eprime, iBar(coeff, n));
    ConeMat rhs = eprime; // iBar(m) * E
    for (Index j = 0; j < n; ++j) {
        std::vector<Index> rows = e.colSupport(j);
        for (Index i = 0; i < m; ++i) rows.push_back(i);
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        for (Index i : rows)
            if (!coeff->eq(lhs.entry(i, j), rhs.entry(i, j)))
                throw std::logic_error(
                    "oreMoveWitness: verification failed (oracle violates its supports)");
    }
    return OreMove{m, std::move(eprime)};
}

Index oreAnnWitness(Index n, const ConeMat& e) {
    FinMat f = materializeFinite(e); // throws CertificateRequired without a Finite cert
    Index m = 0;
    for (const auto& [k, v] : f.entries()) {
        if (k.second >= n)
            throw std::invalid_argument("oreAnnWitness: E * iBar(n) != 0");
        m = std::max(m, k.first + 1);
    }
    // All nonzero rows of E lie below m, so iBar(m) * E = 0 exactly.
    return m;
}

Fraction fracMul(const Fraction& f, const Fraction& g) {
    OreMove moved = oreMoveWitness(g.denomIndex, f.numer);
    return Fraction{std::max(moved.m, f.denomIndex), coneMul(moved.eprime, g.numer)};
}

Fraction fracAdd(const Fraction& f, const Fraction& g) {
    requireSame(*f.numer.coeff(), *g.numer.coeff());
    auto coeff = f.numer.coeff();
    if (f.denomIndex == g.denomIndex)
        return Fraction{f.denomIndex, coneAdd(f.numer, g.numer)};
    Index u = std::max(f.denomIndex, g.denomIndex);
    return Fraction{u, coneAdd(coneMul(iBar(coeff, g.denomIndex), f.numer),
                               coneMul(iBar(coeff, f.denomIndex), g.numer))};
}

SigmaClass fracToSigma(const Fraction& f) { return SigmaClass{f.numer}; }

Fraction sigmaToFrac(const SigmaClass& a) { return Fraction{0, a.rep}; }

Verdict fracEq(const Fraction& f, const Fraction& g, Index window) {
    Verdict v = sigmaEq(fracToSigma(f), fracToSigma(g), window);
    if (v.kind == Verdict::Kind::EqualCertified)
        v.fractionWitness = std::max({f.denomIndex, g.denomIndex, v.bound});
    return v;
}

} // namespace conesigma
