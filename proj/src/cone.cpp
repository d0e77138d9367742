#include "conesigma/cone.hpp"
#include "conesigma/pairing.hpp"

#include <algorithm>
#include <map>

namespace conesigma {

namespace {

constexpr std::size_t kValueBoundCap = 64;

std::vector<Index> mergeSorted(std::vector<Index> a, const std::vector<Index>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

void insertValue(const Coefficients& coeff, std::vector<AlgElem>& set, const AlgElem& v) {
    for (const auto& w : set)
        if (coeff.eq(w, v)) return;
    set.push_back(v);
}

ConeMat::ValueBound vbAdd(const Coefficients& coeff, const ConeMat::ValueBound& a,
                          const ConeMat::ValueBound& b) {
    if (!a || !b) return std::nullopt;
    std::vector<AlgElem> out;
    for (const auto& x : *a)
        for (const auto& y : *b) {
            insertValue(coeff, out, coeff.add(x, y));
            if (out.size() > kValueBoundCap) return std::nullopt;
        }
    return out;
}

// Entries of a product are sums of at most `band` pairwise products.
ConeMat::ValueBound vbMul(const Coefficients& coeff, const ConeMat::ValueBound& a,
                          const ConeMat::ValueBound& b, Index band) {
    if (!a || !b) return std::nullopt;
    std::vector<AlgElem> products;
    for (const auto& x : *a)
        for (const auto& y : *b) {
            insertValue(coeff, products, coeff.mul(x, y));
            if (products.size() > kValueBoundCap) return std::nullopt;
        }
    std::vector<AlgElem> sums{coeff.zero()};
    for (Index step = 0; step < band; ++step) {
        std::vector<AlgElem> next = sums;
        for (const auto& s : sums)
            for (const auto& p : products) {
                insertValue(coeff, next, coeff.add(s, p));
                if (next.size() > kValueBoundCap) return std::nullopt;
            }
        if (next.size() == sums.size()) break;
        sums = std::move(next);
    }
    return sums;
}

ConeMat::ValueBound vbScale(const Coefficients& coeff, const AlgElem& c,
                            const ConeMat::ValueBound& a) {
    if (!a) return std::nullopt;
    std::vector<AlgElem> out;
    for (const auto& x : *a) insertValue(coeff, out, coeff.mul(c, x));
    return out;
}

} // namespace

Cert Cert::scalarPlusFinite(const Coefficients& coeff, AlgElem c, Index b) {
    if (coeff.isZero(c)) return finite(b);
    return Cert{Kind::ScalarPlusFinite, b, std::move(c)};
}

ConeMat ConeMat::fromOracles(CoeffPtr coeff, EntryFn entry, SupportFn rowSupport,
                             SupportFn colSupport, Index bandBound, Cert cert,
                             ValueBound valueBound) {
    auto impl = std::make_shared<Impl>();
    impl->coeff = std::move(coeff);
    impl->entry = std::move(entry);
    impl->rowSupport = std::move(rowSupport);
    impl->colSupport = std::move(colSupport);
    impl->band = bandBound;
    impl->cert = std::move(cert);
    impl->valueBound = std::move(valueBound);
    return ConeMat(std::move(impl));
}

ConeMat coneFromFinite(const FinMat& f) {
    auto coeff = f.coeff();
    auto rows = std::make_shared<std::map<Index, std::vector<Index>>>();
    auto cols = std::make_shared<std::map<Index, std::vector<Index>>>();
    std::vector<AlgElem> values{coeff->zero()};
    for (const auto& [k, v] : f.entries()) {
        (*rows)[k.first].push_back(k.second);
        (*cols)[k.second].push_back(k.first);
        insertValue(*coeff, values, v);
    }
    FinMat copy = f;
    return ConeMat::fromOracles(
        coeff, [copy](Index i, Index j) { return copy.get(i, j); },
        [rows](Index i) {
            auto it = rows->find(i);
            return it == rows->end() ? std::vector<Index>{} : it->second;
        },
        [cols](Index j) {
            auto it = cols->find(j);
            return it == cols->end() ? std::vector<Index>{} : it->second;
        },
        f.maxLineSupport(), Cert::finite(f.bound()),
        values.size() <= kValueBoundCap ? std::optional(values) : std::nullopt);
}

ConeMat coneScalarIdentity(CoeffPtr coeff, AlgElem c) {
    if (coeff->isZero(c)) return coneFromFinite(FinMat::zero(coeff));
    AlgElem cc = c;
    std::vector<AlgElem> values{coeff->zero(), cc};
    return ConeMat::fromOracles(
        coeff,
        [coeff, cc](Index i, Index j) { return i == j ? cc : coeff->zero(); },
        [](Index i) { return std::vector<Index>{i}; },
        [](Index j) { return std::vector<Index>{j}; }, 1,
        Cert::scalarPlusFinite(*coeff, cc, 0), values);
}

ConeMat coneIdentity(CoeffPtr coeff) {
    AlgElem one = coeff->one();
    return coneScalarIdentity(std::move(coeff), std::move(one));
}

ConeMat iBar(CoeffPtr coeff, Index n) {
    AlgElem one = coeff->one();
    std::vector<AlgElem> values{coeff->zero(), one};
    return ConeMat::fromOracles(
        coeff,
        [coeff, one, n](Index i, Index j) {
            return (i == j && i >= n) ? one : coeff->zero();
        },
        [n](Index i) { return i >= n ? std::vector<Index>{i} : std::vector<Index>{}; },
        [n](Index j) { return j >= n ? std::vector<Index>{j} : std::vector<Index>{}; }, 1,
        Cert::scalarPlusFinite(*coeff, one, n), values);
}

ConeMat coneAdd(const ConeMat& a, const ConeMat& b) {
    requireSame(*a.coeff(), *b.coeff());
    auto coeff = a.coeff();
    Cert cert = Cert::none();
    const Cert &ca = a.cert(), &cb = b.cert();
    if (ca.kind != Cert::Kind::None && cb.kind != Cert::Kind::None) {
        Index bound = std::max(ca.bound, cb.bound);
        if (ca.kind == Cert::Kind::Finite && cb.kind == Cert::Kind::Finite)
            cert = Cert::finite(bound);
        else {
            AlgElem s = coeff->zero();
            if (ca.kind == Cert::Kind::ScalarPlusFinite) s = coeff->add(s, ca.scalar);
            if (cb.kind == Cert::Kind::ScalarPlusFinite) s = coeff->add(s, cb.scalar);
            cert = Cert::scalarPlusFinite(*coeff, std::move(s), bound);
        }
    }
    ConeMat aa = a, bb = b;
    return ConeMat::fromOracles(
        coeff,
        [aa, bb](Index i, Index j) {
            return aa.coeff()->add(aa.entry(i, j), bb.entry(i, j));
        },
        [aa, bb](Index i) { return mergeSorted(aa.rowSupport(i), bb.rowSupport(i)); },
        [aa, bb](Index j) { return mergeSorted(aa.colSupport(j), bb.colSupport(j)); },
        a.bandBound() + b.bandBound(), std::move(cert),
        vbAdd(*coeff, a.valueBound(), b.valueBound()));
}

ConeMat coneScale(const AlgElem& c, const ConeMat& a) {
    auto coeff = a.coeff();
    Cert cert = Cert::none();
    switch (a.cert().kind) {
        case Cert::Kind::Finite:
            cert = Cert::finite(a.cert().bound);
            break;
        case Cert::Kind::ScalarPlusFinite:
            cert = Cert::scalarPlusFinite(*coeff, coeff->mul(c, a.cert().scalar), a.cert().bound);
            break;
        case Cert::Kind::None:
            break;
    }
    ConeMat aa = a;
    AlgElem cc = c;
    return ConeMat::fromOracles(
        coeff, [aa, cc](Index i, Index j) { return aa.coeff()->mul(cc, aa.entry(i, j)); },
        [aa](Index i) { return aa.rowSupport(i); },
        [aa](Index j) { return aa.colSupport(j); }, a.bandBound(), std::move(cert),
        vbScale(*coeff, c, a.valueBound()));
}

ConeMat coneNeg(const ConeMat& a) {
    return coneScale(a.coeff()->neg(a.coeff()->one()), a);
}

ConeMat coneSub(const ConeMat& a, const ConeMat& b) { return coneAdd(a, coneNeg(b)); }

ConeMat coneMul(const ConeMat& a, const ConeMat& b) {
    requireSame(*a.coeff(), *b.coeff());
    auto coeff = a.coeff();
    ConeMat aa = a, bb = b;

    auto entry = [aa, bb](Index i, Index j) {
        AlgElem acc = aa.coeff()->zero();
        for (Index k : aa.rowSupport(i))
            acc = aa.coeff()->add(acc, aa.coeff()->mul(aa.entry(i, k), bb.entry(k, j)));
        return acc;
    };
    auto rowSupport = [aa, bb](Index i) {
        std::vector<Index> out;
        for (Index k : aa.rowSupport(i)) {
            auto r = bb.rowSupport(k);
            out.insert(out.end(), r.begin(), r.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    auto colSupport = [aa, bb](Index j) {
        std::vector<Index> out;
        for (Index k : bb.colSupport(j)) {
            auto c = aa.colSupport(k);
            out.insert(out.end(), c.begin(), c.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    const Cert &ca = a.cert(), &cb = b.cert();
    Cert cert = Cert::none();
    if (ca.kind == Cert::Kind::Finite && cb.kind == Cert::Kind::Finite)
        cert = Cert::finite(std::max(ca.bound, cb.bound));
    else if (ca.kind == Cert::Kind::Finite && cb.kind == Cert::Kind::ScalarPlusFinite)
        cert = Cert::finite(std::max(ca.bound, cb.bound));
    else if (ca.kind == Cert::Kind::ScalarPlusFinite && cb.kind == Cert::Kind::Finite)
        cert = Cert::finite(std::max(ca.bound, cb.bound));
    else if (ca.kind == Cert::Kind::ScalarPlusFinite && cb.kind == Cert::Kind::ScalarPlusFinite)
        cert = Cert::scalarPlusFinite(*coeff, coeff->mul(ca.scalar, cb.scalar),
                                      std::max(ca.bound, cb.bound));
    else if (ca.kind == Cert::Kind::Finite) {
        // nonzero rows < bound(a); column extent found through the supports
        Index b = ca.bound;
        for (Index i = 0; i < ca.bound; ++i)
            for (Index j : rowSupport(i)) b = std::max(b, j + 1);
        cert = Cert::finite(b);
    } else if (cb.kind == Cert::Kind::Finite) {
        Index b = cb.bound;
        for (Index j = 0; j < cb.bound; ++j)
            for (Index i : colSupport(j)) b = std::max(b, i + 1);
        cert = Cert::finite(b);
    }

    return ConeMat::fromOracles(coeff, std::move(entry), std::move(rowSupport),
                                std::move(colSupport), a.bandBound() * b.bandBound(),
                                std::move(cert),
                                vbMul(*coeff, a.valueBound(), b.valueBound(), a.bandBound()));
}

ConeMat coneTranspose(const ConeMat& a) {
    ConeMat aa = a;
    return ConeMat::fromOracles(
        a.coeff(), [aa](Index i, Index j) { return aa.entry(j, i); },
        [aa](Index i) { return aa.colSupport(i); },
        [aa](Index j) { return aa.rowSupport(j); }, a.bandBound(), a.cert(),
        a.valueBound());
}

ConeMat phiMap(const ConeMat& a) {
    auto coeff = a.coeff();
    ConeMat aa = a;
    Cert cert = Cert::none();
    if (a.cert().bound == 0 && a.cert().kind != Cert::Kind::None) cert = a.cert();
    return ConeMat::fromOracles(
        coeff,
        [aa](Index i, Index j) {
            PairPoint pi = unpairIndex(i), pj = unpairIndex(j);
            if (pi.second != pj.second) return aa.coeff()->zero();
            return aa.entry(pi.first, pj.first);
        },
        [aa](Index i) {
            PairPoint pi = unpairIndex(i);
            std::vector<Index> out;
            for (Index c : aa.rowSupport(pi.first)) out.push_back(pairIndex(c, pi.second));
            return out;
        },
        [aa](Index j) {
            PairPoint pj = unpairIndex(j);
            std::vector<Index> out;
            for (Index r : aa.colSupport(pj.first)) out.push_back(pairIndex(r, pj.second));
            return out;
        },
        a.bandBound(), std::move(cert), a.valueBound());
}

std::pair<ConeMat, ConeMat> pairingShifts(CoeffPtr coeff) {
    AlgElem one = coeff->one();
    ConeMat alpha = ConeMat::fromOracles(
        coeff,
        [coeff, one](Index i, Index j) {
            return j == pairIndex(i, 0) ? one : coeff->zero();
        },
        [](Index i) { return std::vector<Index>{pairIndex(i, 0)}; },
        [](Index j) {
            PairPoint p = unpairIndex(j);
            return p.second == 0 ? std::vector<Index>{p.first} : std::vector<Index>{};
        },
        1, Cert::none(), std::vector<AlgElem>{coeff->zero(), one});
    ConeMat beta = ConeMat::fromOracles(
        coeff,
        [coeff, one](Index i, Index j) {
            PairPoint pi = unpairIndex(i);
            return j == pairIndex(pi.first, pi.second + 1) ? one : coeff->zero();
        },
        [](Index i) {
            PairPoint pi = unpairIndex(i);
            return std::vector<Index>{pairIndex(pi.first, pi.second + 1)};
        },
        [](Index j) {
            PairPoint pj = unpairIndex(j);
            if (pj.second == 0) return std::vector<Index>{};
            return std::vector<Index>{pairIndex(pj.first, pj.second - 1)};
        },
        1, Cert::none(), std::vector<AlgElem>{coeff->zero(), one});
    return {std::move(alpha), std::move(beta)};
}

WElement rightWAction(const WElement& b, const ConeMat& a) {
    return WElement{coneMul(b.underlying, phiMap(a))};
}

WElement wIsoForward(const ConeMat& a, const WElement& b) {
    auto [alpha, beta] = pairingShifts(a.coeff());
    return WElement{coneAdd(coneMul(a, alpha), coneMul(b.underlying, beta))};
}

std::pair<ConeMat, WElement> wIsoBackward(const WElement& c) {
    auto [alpha, beta] = pairingShifts(c.underlying.coeff());
    return {coneMul(c.underlying, coneTranspose(alpha)),
            WElement{coneMul(c.underlying, coneTranspose(beta))}};
}

std::vector<std::vector<AlgElem>> windowRender(const ConeMat& a, Index row0, Index row1,
                                               Index col0, Index col1) {
    std::vector<std::vector<AlgElem>> out(
        row1 - row0, std::vector<AlgElem>(col1 - col0, a.coeff()->zero()));
    for (Index i = row0; i < row1; ++i)
        for (Index j : a.rowSupport(i))
            if (j >= col0 && j < col1) out[i - row0][j - col0] = a.entry(i, j);
    return out;
}

WindowReport eqOnWindowReport(const ConeMat& a, const ConeMat& b, Index n) {
    requireSame(*a.coeff(), *b.coeff());
    WindowReport report;
    report.window = n;
    for (Index i = 0; i < n; ++i) {
        auto cols = mergeSorted(a.rowSupport(i), b.rowSupport(i));
        for (Index j : cols) {
            if (j >= n) continue;
            if (!a.coeff()->eq(a.entry(i, j), b.entry(i, j))) {
                report.agrees = false;
                report.firstMismatch = {i, j};
                return report;
            }
        }
    }
    return report;
}

bool eqOnWindow(const ConeMat& a, const ConeMat& b, Index n) {
    return eqOnWindowReport(a, b, n).agrees;
}

FinMat materializeFinite(const ConeMat& a) {
    if (a.cert().kind != Cert::Kind::Finite)
        throw CertificateRequired("materializeFinite: no Finite certificate");
    FinMat out(a.coeff());
    for (Index i = 0; i < a.cert().bound; ++i)
        for (Index j : a.rowSupport(i))
            if (j < a.cert().bound) out.set(i, j, a.entry(i, j));
    return out;
}

} // namespace conesigma
