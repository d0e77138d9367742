#include "conesigma/homology.hpp"

#include <algorithm>

namespace conesigma {

namespace {

// Integer matrix with the same row space shape: each row scaled by the
// lcm of its denominators (rank-preserving).
std::vector<std::vector<Int>> clearDenominators(const DenseMat& m) {
    std::vector<std::vector<Int>> out(m.rows, std::vector<Int>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r) {
        Int l = 1;
        for (std::size_t c = 0; c < m.cols; ++c)
            l = boost::multiprecision::lcm(l, denominator(m.at(r, c)));
        for (std::size_t c = 0; c < m.cols; ++c) {
            const Rational& v = m.at(r, c);
            out[r][c] = numerator(v) * (l / denominator(v));
        }
    }
    return out;
}

std::size_t bareissRank(std::vector<std::vector<Int>> a) {
    if (a.empty() || a[0].empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    Int prev = 1;
    std::size_t col = 0;
    for (std::size_t row = 0; row < rows && col < cols; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = row; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(a[row], a[pivot]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

std::size_t modularRank(const DenseMat& m, const CoeffRing& ring) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = ring.normalize(m.at(r, c));
    std::size_t rank = 0, row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pivot = m.rows;
        for (std::size_t r = row; r < m.rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == m.rows) continue;
        std::swap(a[row], a[pivot]);
        Rational inv = ring.inv(a[row][col]);
        for (std::size_t r = row + 1; r < m.rows; ++r) {
            if (a[r][col] == 0) continue;
            Rational factor = ring.mul(a[r][col], inv);
            for (std::size_t c = col; c < m.cols; ++c)
                a[r][c] = ring.sub(a[r][c], ring.mul(factor, a[row][c]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

DenseMat denseMul(const DenseMat& x, const DenseMat& y, const CoeffRing& ring) {
    if (x.cols != y.rows) throw std::invalid_argument("denseMul: shape mismatch");
    DenseMat out(x.rows, y.cols);
    for (std::size_t r = 0; r < x.rows; ++r)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.at(r, k) == 0) continue;
            for (std::size_t c = 0; c < y.cols; ++c) {
                if (y.at(k, c) == 0) continue;
                out.at(r, c) = ring.add(out.at(r, c), ring.mul(x.at(r, k), y.at(k, c)));
            }
        }
    return out;
}

std::size_t rankOverField(const DenseMat& m, const CoeffRing& ring) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (ring.kind() == CoeffRing::Kind::IntegersModP) return modularRank(m, ring);
    return bareissRank(clearDenominators(m));
}

std::vector<Int> smithNormalForm(const DenseMat& m) {
    std::vector<std::vector<Int>> a(m.rows, std::vector<Int>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (denominator(m.at(r, c)) != 1)
                throw std::invalid_argument("smithNormalForm: non-integer entry");
            a[r][c] = numerator(m.at(r, c));
        }
    std::vector<Int> factors;
    std::size_t t = 0;
    while (t < m.rows && t < m.cols) {
        // least-absolute-value nonzero pivot in the trailing block
        std::size_t pr = m.rows, pc = m.cols;
        for (std::size_t r = t; r < m.rows; ++r)
            for (std::size_t c = t; c < m.cols; ++c)
                if (a[r][c] != 0 &&
                    (pr == m.rows || abs(a[r][c]) < abs(a[pr][pc])))
                    pr = r, pc = c;
        if (pr == m.rows) break;
        std::swap(a[t], a[pr]);
        for (std::size_t r = t; r < m.rows; ++r) std::swap(a[r][t], a[r][pc]);

        bool clean = true;
        for (std::size_t r = t + 1; r < m.rows; ++r) {
            if (a[r][t] == 0) continue;
            Int q = a[r][t] / a[t][t];
            for (std::size_t c = t; c < m.cols; ++c) a[r][c] -= q * a[t][c];
            if (a[r][t] != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < m.cols; ++c) {
            if (a[t][c] == 0) continue;
            Int q = a[t][c] / a[t][t];
            for (std::size_t r = t; r < m.rows; ++r) a[r][c] -= q * a[r][t];
            if (a[t][c] != 0) clean = false;
        }
        if (!clean) continue; // smaller remainders appeared, pick a new pivot

        // pivot must divide every remaining entry for the divisibility chain
        bool divides = true;
        for (std::size_t r = t + 1; r < m.rows && divides; ++r)
            for (std::size_t c = t + 1; c < m.cols && divides; ++c)
                if (a[r][c] % a[t][t] != 0) {
                    for (std::size_t cc = t; cc < m.cols; ++cc) a[t][cc] += a[r][cc];
                    divides = false;
                }
        if (!divides) continue;

        factors.push_back(abs(a[t][t]));
        ++t;
    }
    return factors;
}

ValidationReport verifyComplex(const ChainComplexSpec& c) {
    if (c.dims.empty()) return {false, "empty complex"};
    if (c.differentials.size() + 1 != c.dims.size())
        return {false, "differential count does not chain with module count"};
    for (std::size_t n = 0; n < c.differentials.size(); ++n)
        if (c.differentials[n].rows != c.dims[n] || c.differentials[n].cols != c.dims[n + 1])
            return {false, "differential " + std::to_string(n + 1) + " has wrong shape"};
    for (std::size_t n = 0; n + 1 < c.differentials.size(); ++n) {
        DenseMat composite = denseMul(c.differentials[n], c.differentials[n + 1], c.coeff);
        for (const auto& v : composite.a)
            if (v != 0)
                return {false, "d_" + std::to_string(n + 1) + " . d_" + std::to_string(n + 2) +
                                   " != 0"};
    }
    return {true, "ok"};
}

ChainComplexSpec makeChainComplex(CoeffRing coeff, std::vector<std::size_t> dims,
                                  std::vector<DenseMat> differentials) {
    ChainComplexSpec c{coeff, std::move(dims), std::move(differentials)};
    auto report = verifyComplex(c);
    if (!report.pass) throw std::invalid_argument("invalid chain complex: " + report.message);
    return c;
}

std::vector<std::size_t> homologyDims(const ChainComplexSpec& c) {
    if (!c.coeff.isField()) throw std::invalid_argument("homologyDims: field coefficients required");
    auto report = verifyComplex(c);
    if (!report.pass) throw std::invalid_argument("homologyDims: " + report.message);
    const std::size_t top = c.topDegree();
    std::vector<std::size_t> rank(top + 2, 0); // rank[n] = rank d_n, d_0 = d_{top+1} = 0
    for (std::size_t n = 1; n <= top; ++n) rank[n] = rankOverField(c.differentials[n - 1], c.coeff);
    std::vector<std::size_t> h(top + 1);
    for (std::size_t n = 0; n <= top; ++n) h[n] = c.dims[n] - rank[n] - rank[n + 1];
    return h;
}

std::vector<HomologyGroup> homologyGroupsZ(const ChainComplexSpec& c) {
    if (c.coeff.kind() != CoeffRing::Kind::Integers)
        throw std::invalid_argument("homologyGroupsZ: integer coefficients required");
    auto report = verifyComplex(c);
    if (!report.pass) throw std::invalid_argument("homologyGroupsZ: " + report.message);
    const std::size_t top = c.topDegree();
    std::vector<std::vector<Int>> snf(top + 2);
    for (std::size_t n = 1; n <= top; ++n) snf[n] = smithNormalForm(c.differentials[n - 1]);
    std::vector<HomologyGroup> h(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        std::size_t rn = snf[n].size(), rn1 = snf[n + 1].size();
        h[n].freeRank = c.dims[n] - rn - rn1;
        for (const Int& d : snf[n + 1])
            if (d > 1) h[n].torsion.push_back(d);
    }
    return h;
}

} // namespace conesigma
