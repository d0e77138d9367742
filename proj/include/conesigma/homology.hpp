#pragma once

#include "conesigma/coeff.hpp"

namespace conesigma {

// Dense matrix of exact scalars, row-major.
struct DenseMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> a;

    DenseMat() = default;
    DenseMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

    Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    friend bool operator==(const DenseMat&, const DenseMat&) = default;
};

DenseMat denseMul(const DenseMat& x, const DenseMat& y, const CoeffRing& ring);

// Exact rank by fraction-free elimination (denominators cleared per row,
// then Bareiss); over Z/p, modular elimination.
std::size_t rankOverField(const DenseMat& m, const CoeffRing& ring);

// Nonzero invariant factors d1 | d2 | ..., all positive.
std::vector<Int> smithNormalForm(const DenseMat& m);

// Chain complex C_0 <- C_1 <- ... <- C_N; differentials[n] is
// d_{n+1}: C_{n+1} -> C_n, a dims[n] x dims[n+1] matrix.
struct ChainComplexSpec {
    CoeffRing coeff = CoeffRing::rationals();
    std::vector<std::size_t> dims;
    std::vector<DenseMat> differentials;

    std::size_t topDegree() const { return dims.size() - 1; }
};

ValidationReport verifyComplex(const ChainComplexSpec& c);

// Validated constructor: throws unless shapes chain and d.d = 0.
ChainComplexSpec makeChainComplex(CoeffRing coeff, std::vector<std::size_t> dims,
                                  std::vector<DenseMat> differentials);

// H_n dimensions over a field, n = 0..topDegree.
std::vector<std::size_t> homologyDims(const ChainComplexSpec& c);

struct HomologyGroup {
    std::size_t freeRank = 0;
    std::vector<Int> torsion; // invariant factors > 1
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Integral homology via Smith normal form.
std::vector<HomologyGroup> homologyGroupsZ(const ChainComplexSpec& c);

} // namespace conesigma
