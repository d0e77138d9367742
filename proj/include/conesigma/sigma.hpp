#pragma once

#include "conesigma/cone.hpp"

namespace conesigma {

// Element of the suspension algebra as a cone-algebra representative;
// the class is taken modulo finite matrices.
struct SigmaClass {
    ConeMat rep;
};

// Left fraction (denomIndex, numer) standing for iBar(denomIndex)^{-1} * numer.
// denomIndex 0 means unit denominator. No canonical reduced form is kept;
// equality is semantic, through the quotient.
struct Fraction {
    Index denomIndex = 0;
    ConeMat numer;
};

// Outcome of a suspension-algebra equality test. EqualCertified carries a
// materialized finite difference as evidence; Unknown never claims
// inequality and carries the window agreement report instead.
struct Verdict {
    enum class Kind { EqualCertified, Unknown };

    Kind kind = Kind::Unknown;
    Index bound = 0;                      // EqualCertified: difference vanishes outside [0,bound)^2
    std::optional<FinMat> evidence;       // EqualCertified: the materialized difference
    WindowReport report;                  // Unknown: entrywise window comparison
    std::optional<Index> fractionWitness; // fracEq: p with (iBar(p), iBar(p)) relating the pairs
};

Verdict sigmaEq(const SigmaClass& a, const SigmaClass& b, Index window = 32);

SigmaClass sigmaAdd(const SigmaClass& a, const SigmaClass& b);
SigmaClass sigmaMul(const SigmaClass& a, const SigmaClass& b);

struct OreMove {
    Index m = 0;
    ConeMat eprime;
};

// Left Ore move condition: finds m and E' with E' * iBar(n) = iBar(m) * E,
// m = max(n, 1 + largest row index met by columns < n), E' = iBar(m) * E.
// The identity is verified on the relevant supports before returning.
OreMove oreMoveWitness(Index n, const ConeMat& e);

// Left Ore annihilator condition: for certified-finite E with E * iBar(n) = 0,
// returns m with iBar(m) * E = 0 exactly.
Index oreAnnWitness(Index n, const ConeMat& e);

Fraction fracMul(const Fraction& f, const Fraction& g);
Fraction fracAdd(const Fraction& f, const Fraction& g);

SigmaClass fracToSigma(const Fraction& f);
Fraction sigmaToFrac(const SigmaClass& a);

Verdict fracEq(const Fraction& f, const Fraction& g, Index window = 32);

} // namespace conesigma
