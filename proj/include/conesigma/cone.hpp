#pragma once

#include "conesigma/coeff.hpp"
#include "conesigma/finmat.hpp"

#include <functional>
#include <optional>

namespace conesigma {

// Finiteness certificates for lazily represented matrices.
//   Finite(b): all nonzero entries lie in [0,b)^2 (membership in the
//              finite-matrix ideal, with evidence).
//   ScalarPlusFinite(c,b): the matrix equals c*I plus a Finite(b) part.
// A ScalarPlusFinite with zero scalar normalizes to Finite.
struct Cert {
    enum class Kind { None, Finite, ScalarPlusFinite };

    Kind kind = Kind::None;
    Index bound = 0;
    AlgElem scalar; // ScalarPlusFinite only

    static Cert none() { return Cert{}; }
    static Cert finite(Index b) { return Cert{Kind::Finite, b, {}}; }
    static Cert scalarPlusFinite(const Coefficients& coeff, AlgElem c, Index b);
};

struct CertificateRequired : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of the cone algebra: an NxN matrix given by a total entry
// oracle plus finite row/column support oracles and a band bound (at most
// bandBound nonzeros per row and per column). Entries vanish outside the
// declared supports; the supports may overshoot. Immutable, cheap to copy.
class ConeMat {
public:
    using EntryFn = std::function<AlgElem(Index, Index)>;
    using SupportFn = std::function<std::vector<Index>(Index)>;
    using ValueBound = std::optional<std::vector<AlgElem>>;

    static ConeMat fromOracles(CoeffPtr coeff, EntryFn entry, SupportFn rowSupport,
                               SupportFn colSupport, Index bandBound, Cert cert,
                               ValueBound valueBound = std::nullopt);

    const CoeffPtr& coeff() const { return impl_->coeff; }
    AlgElem entry(Index i, Index j) const { return impl_->entry(i, j); }
    std::vector<Index> rowSupport(Index i) const { return impl_->rowSupport(i); }
    std::vector<Index> colSupport(Index j) const { return impl_->colSupport(j); }
    Index bandBound() const { return impl_->band; }
    const Cert& cert() const { return impl_->cert; }
    const ValueBound& valueBound() const { return impl_->valueBound; }

private:
    struct Impl {
        CoeffPtr coeff;
        EntryFn entry;
        SupportFn rowSupport, colSupport;
        Index band = 0;
        Cert cert;
        ValueBound valueBound;
    };
    explicit ConeMat(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// Embedding of a finite matrix, with Finite(bound) certificate.
ConeMat coneFromFinite(const FinMat& f);

ConeMat coneIdentity(CoeffPtr coeff);
// c * I, certificate ScalarPlusFinite(c, 0).
ConeMat coneScalarIdentity(CoeffPtr coeff, AlgElem c);
// I - I_n, certificate ScalarPlusFinite(1, n); iBar(0) = I.
ConeMat iBar(CoeffPtr coeff, Index n);

ConeMat coneAdd(const ConeMat& a, const ConeMat& b);
ConeMat coneSub(const ConeMat& a, const ConeMat& b);
ConeMat coneNeg(const ConeMat& a);
ConeMat coneMul(const ConeMat& a, const ConeMat& b);
ConeMat coneScale(const AlgElem& c, const ConeMat& a);
ConeMat coneTranspose(const ConeMat& a);

// Entrywise A(theta1(i), theta1(j)) when theta2(i) = theta2(j), else 0.
// Unital algebra endomorphism; destroys Finite certificates.
ConeMat phiMap(const ConeMat& a);

// The 0/1 shift matrices built from the pairing:
//   alpha(i,j) = 1 iff j = pairIndex(i, 0)
//   beta(i,j)  = 1 iff theta(j) = theta(i) + (0, 1)
std::pair<ConeMat, ConeMat> pairingShifts(CoeffPtr coeff);

// The bimodule that is the cone algebra as a left module, with right
// action twisted through phiMap.
struct WElement {
    ConeMat underlying;
};

WElement rightWAction(const WElement& b, const ConeMat& a); // B * phi(A)

// (A, B) -> A*alpha + B*beta, and its inverse C -> (C*alpha^T, C*beta^T).
WElement wIsoForward(const ConeMat& a, const WElement& b);
std::pair<ConeMat, WElement> wIsoBackward(const WElement& c);

// Dense evaluation of the rectangle [row0,row1) x [col0,col1).
std::vector<std::vector<AlgElem>> windowRender(const ConeMat& a, Index row0, Index row1,
                                               Index col0, Index col1);

struct WindowReport {
    Index window = 0;
    bool agrees = true;
    std::optional<std::pair<Index, Index>> firstMismatch;
};

// Entrywise equality on [0,N)^2, evaluated through the support oracles
// (off-support entries are zero by the oracle contract). The report
// carries the row-major first disagreement, if any.
WindowReport eqOnWindowReport(const ConeMat& a, const ConeMat& b, Index n);
bool eqOnWindow(const ConeMat& a, const ConeMat& b, Index n);

// Exact extraction of a certified-finite matrix. Throws
// CertificateRequired unless cert is Finite(b).
FinMat materializeFinite(const ConeMat& a);

} // namespace conesigma
