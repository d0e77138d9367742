#pragma once

#include "conesigma/coeff.hpp"

#include <map>
#include <vector>

namespace conesigma {

// Finite sparse matrix: element of the non-unital algebra of finite
// matrices. Zero values are never stored, so equality is map equality.
class FinMat {
public:
    using Key = std::pair<Index, Index>;

    explicit FinMat(CoeffPtr coeff) : coeff_(std::move(coeff)) {}

    static FinMat zero(CoeffPtr coeff) { return FinMat(std::move(coeff)); }
    static FinMat unit(CoeffPtr coeff, Index k, Index l); // E_kl
    static FinMat diagonal(CoeffPtr coeff, Index n);      // I_n, first n diagonal ones

    const CoeffPtr& coeff() const { return coeff_; }
    const std::map<Key, AlgElem>& entries() const { return entries_; }
    bool isZero() const { return entries_.empty(); }

    AlgElem get(Index i, Index j) const;
    void set(Index i, Index j, AlgElem v); // dropping zeros

    // 1 + max index in support; 0 for the zero matrix.
    Index bound() const;
    // Largest nonzero count over all rows and columns.
    Index maxLineSupport() const;

    FinMat add(const FinMat& other) const;
    FinMat sub(const FinMat& other) const;
    FinMat mul(const FinMat& other) const;
    FinMat neg() const;
    FinMat scale(const AlgElem& c) const;
    FinMat transpose() const;

    bool operator==(const FinMat& other) const { return entries_ == other.entries_; }

private:
    CoeffPtr coeff_;
    std::map<Key, AlgElem> entries_;
};

// Idempotent object of the finite-matrix category: u with u*u = u.
struct IdemObject {
    FinMat u;
    explicit IdemObject(FinMat m);
};

// Least m such that I_m absorbs every family member on both sides
// (verified before returning).
Index localUnit(const std::vector<FinMat>& family);

// True iff u*f*v = f, i.e. f is a morphism u -> v.
bool idemHom(const IdemObject& u, const FinMat& f, const IdemObject& v);

// (E_{0,n}, E_{n,0}): products are E_{0,0} and E_{n,n}, exhibiting the
// isomorphism between those idempotent objects.
std::pair<FinMat, FinMat> unitIsoPair(CoeffPtr coeff, Index n);

// Column split of f through I_m = sum of E_{t,t}: [f*E_{0,0}, ..., f*E_{m-1,m-1}].
std::vector<FinMat> unitDecompose(const FinMat& f, Index m);

} // namespace conesigma
