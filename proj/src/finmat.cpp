#include "conesigma/finmat.hpp"

#include <algorithm>

namespace conesigma {

FinMat FinMat::unit(CoeffPtr coeff, Index k, Index l) {
    FinMat m(coeff);
    m.set(k, l, coeff->one());
    return m;
}

FinMat FinMat::diagonal(CoeffPtr coeff, Index n) {
    FinMat m(coeff);
    for (Index i = 0; i < n; ++i) m.set(i, i, coeff->one());
    return m;
}

AlgElem FinMat::get(Index i, Index j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? coeff_->zero() : it->second;
}

void FinMat::set(Index i, Index j, AlgElem v) {
    if (coeff_->isZero(v))
        entries_.erase({i, j});
    else
        entries_.insert_or_assign({i, j}, std::move(v));
}

Index FinMat::bound() const {
    Index b = 0;
    for (const auto& [k, v] : entries_) b = std::max({b, k.first + 1, k.second + 1});
    return b;
}

Index FinMat::maxLineSupport() const {
    std::map<Index, Index> rows, cols;
    for (const auto& [k, v] : entries_) {
        ++rows[k.first];
        ++cols[k.second];
    }
    Index m = 0;
    for (const auto& [i, c] : rows) m = std::max(m, c);
    for (const auto& [j, c] : cols) m = std::max(m, c);
    return m;
}

FinMat FinMat::add(const FinMat& other) const {
    requireSame(*coeff_, *other.coeff_);
    FinMat out = *this;
    for (const auto& [k, v] : other.entries_)
        out.set(k.first, k.second, coeff_->add(out.get(k.first, k.second), v));
    return out;
}

FinMat FinMat::sub(const FinMat& other) const { return add(other.neg()); }

FinMat FinMat::neg() const {
    FinMat out(coeff_);
    for (const auto& [k, v] : entries_) out.set(k.first, k.second, coeff_->neg(v));
    return out;
}

FinMat FinMat::scale(const AlgElem& c) const {
    FinMat out(coeff_);
    for (const auto& [k, v] : entries_) out.set(k.first, k.second, coeff_->mul(c, v));
    return out;
}

FinMat FinMat::mul(const FinMat& other) const {
    requireSame(*coeff_, *other.coeff_);
    FinMat out(coeff_);
    for (const auto& [ka, va] : entries_) {
        // row of other indexed by ka.second
        auto it = other.entries_.lower_bound({ka.second, 0});
        for (; it != other.entries_.end() && it->first.first == ka.second; ++it) {
            Index i = ka.first, j = it->first.second;
            out.set(i, j, coeff_->add(out.get(i, j), coeff_->mul(va, it->second)));
        }
    }
    return out;
}

FinMat FinMat::transpose() const {
    FinMat out(coeff_);
    for (const auto& [k, v] : entries_) out.set(k.second, k.first, v);
    return out;
}

IdemObject::IdemObject(FinMat m) : u(std::move(m)) {
    if (!(u.mul(u) == u)) throw std::invalid_argument("IdemObject: matrix is not idempotent");
}

Index localUnit(const std::vector<FinMat>& family) {
    if (family.empty()) throw std::invalid_argument("localUnit: empty family");
    Index m = 0;
    for (const auto& f : family) m = std::max(m, f.bound());
    FinMat im = FinMat::diagonal(family.front().coeff(), m);
    for (const auto& f : family)
        if (!(im.mul(f) == f) || !(f.mul(im) == f))
            throw std::logic_error("localUnit: absorption check failed");
    return m;
}

bool idemHom(const IdemObject& u, const FinMat& f, const IdemObject& v) {
    requireSame(*u.u.coeff(), *f.coeff());
    requireSame(*f.coeff(), *v.u.coeff());
    return u.u.mul(f).mul(v.u) == f;
}

std::pair<FinMat, FinMat> unitIsoPair(CoeffPtr coeff, Index n) {
    return {FinMat::unit(coeff, 0, n), FinMat::unit(coeff, n, 0)};
}

std::vector<FinMat> unitDecompose(const FinMat& f, Index m) {
    FinMat im = FinMat::diagonal(f.coeff(), m);
    if (!(f.mul(im) == f)) throw std::invalid_argument("unitDecompose: f*I_m != f");
    std::vector<FinMat> parts;
    parts.reserve(m);
    for (Index t = 0; t < m; ++t) parts.push_back(f.mul(FinMat::unit(f.coeff(), t, t)));
    return parts;
}

} // namespace conesigma
