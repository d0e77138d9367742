#include "conesigma/hochschild.hpp"

#include <stdexcept>

namespace conesigma {

namespace {

std::size_t checkedPow(std::size_t base, std::size_t exp, std::size_t budget) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > budget / base) throw std::invalid_argument("hochschild: budget exceeded");
        v *= base;
    }
    return v;
}

// d_n: A^{tensor (n+1)} -> A^{tensor n}, alternating sum of neighbour
// multiplications plus the wrap-around term.
DenseMat barDifferential(const AlgebraSpec& a, std::size_t n) {
    const std::size_t d = a.dim();
    std::size_t srcDim = 1, dstDim = 1;
    for (std::size_t i = 0; i < n + 1; ++i) srcDim *= d;
    for (std::size_t i = 0; i < n; ++i) dstDim *= d;
    DenseMat out(dstDim, srcDim);

    std::vector<std::size_t> t(n + 1, 0);
    for (std::size_t col = 0; col < srcDim; ++col) {
        // tuple index: t[0] is the most significant digit
        for (std::size_t pos = 0; pos < n; ++pos) {
            int sign = (pos % 2 == 0) ? 1 : -1;
            const auto& cell = a.table[t[pos]][t[pos + 1]];
            for (std::size_t l = 0; l < d; ++l) {
                if (cell[l] == 0) continue;
                std::size_t row = 0;
                for (std::size_t k = 0; k < n + 1; ++k) {
                    if (k == pos + 1) continue;
                    row = row * d + (k == pos ? l : t[k]);
                }
                Rational v = sign > 0 ? cell[l] : -cell[l];
                out.at(row, col) = a.base.add(out.at(row, col), v);
            }
        }
        {
            int sign = (n % 2 == 0) ? 1 : -1;
            const auto& cell = a.table[t[n]][t[0]];
            for (std::size_t l = 0; l < d; ++l) {
                if (cell[l] == 0) continue;
                std::size_t row = l;
                for (std::size_t k = 1; k < n; ++k) row = row * d + t[k];
                Rational v = sign > 0 ? cell[l] : -cell[l];
                out.at(row, col) = a.base.add(out.at(row, col), v);
            }
        }
        for (std::size_t k = n + 1; k-- > 0;) {
            if (++t[k] < d) break;
            t[k] = 0;
        }
    }
    return out;
}

} // namespace

ChainComplexSpec hochschildComplex(const AlgebraSpec& a, std::size_t n, std::size_t budget) {
    if (!a.base.isField()) throw std::invalid_argument("hochschild: field coefficients required");
    auto report = algValidate(a);
    if (!report.pass) throw std::invalid_argument("hochschild: invalid algebra: " + report.message);
    checkedPow(a.dim(), n + 2, budget);

    std::vector<std::size_t> dims(n + 1);
    std::size_t v = a.dim();
    for (std::size_t k = 0; k <= n; ++k, v *= a.dim()) dims[k] = v;
    std::vector<DenseMat> differentials;
    differentials.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) differentials.push_back(barDifferential(a, k));
    return makeChainComplex(a.base, std::move(dims), std::move(differentials));
}

std::size_t hhZeroDirect(const AlgebraSpec& a) {
    const std::size_t d = a.dim();
    // columns: commutators e_i e_j - e_j e_i in basis coordinates
    DenseMat commutators(d, d * d);
    AlgElem ei, ej;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            ei.coords.assign(d, Rational(0));
            ej.coords.assign(d, Rational(0));
            ei.coords[i] = 1;
            ej.coords[j] = 1;
            AlgElem c = algMul(ei, ej, a);
            AlgElem c2 = algMul(ej, ei, a);
            for (std::size_t l = 0; l < d; ++l)
                commutators.at(l, i * d + j) = a.base.sub(c.coords[l], c2.coords[l]);
        }
    return d - rankOverField(commutators, a.base);
}

HHResult hhDims(const AlgebraSpec& a, std::size_t n, std::size_t budget) {
    ChainComplexSpec complex = hochschildComplex(a, n + 1, budget);
    std::vector<std::size_t> all = homologyDims(complex);
    HHResult result;
    result.algebra = a;
    result.topDegree = n;
    result.dims.assign(all.begin(), all.begin() + n + 1);
    if (result.dims[0] != hhZeroDirect(a))
        throw std::logic_error("hhDims: HH_0 disagrees with the commutator-span computation");
    return result;
}

ComparisonReport moritaCompare(const AlgebraSpec& a, std::size_t n, std::size_t topDegree,
                               std::size_t budget) {
    ComparisonReport report;
    report.dimsA = hhDims(a, topDegree, budget).dims;
    report.dimsMatrix = hhDims(matrixAlgebraSpec(n, a), topDegree, budget).dims;
    report.equal = report.dimsA == report.dimsMatrix;
    return report;
}

} // namespace conesigma
