#pragma once

#include "conesigma/homology.hpp"

namespace conesigma {

struct HHResult {
    AlgebraSpec algebra;
    std::size_t topDegree = 0;
    std::vector<std::size_t> dims; // HH_0 .. HH_topDegree
};

struct ComparisonReport {
    std::vector<std::size_t> dimsA;
    std::vector<std::size_t> dimsMatrix;
    bool equal = false;
};

inline constexpr std::size_t kDefaultHHBudget = 1'000'000;

// Unnormalized bar-type complex C_n = A^{tensor (n+1)} with the
// alternating-sum face differential, through degree N. Field
// coefficients; dim(A)^(N+2) must stay within the budget.
ChainComplexSpec hochschildComplex(const AlgebraSpec& a, std::size_t n,
                                   std::size_t budget = kDefaultHHBudget);

// Hochschild homology dimensions HH_0..HH_N. HH_0 is cross-checked
// against the commutator-span computation dim(A) - dim span{ab - ba}.
HHResult hhDims(const AlgebraSpec& a, std::size_t n, std::size_t budget = kDefaultHHBudget);

// dim A/[A,A] computed directly from commutators of basis elements.
std::size_t hhZeroDirect(const AlgebraSpec& a);

// Hochschild Morita invariance at finite rank: HH(A) vs HH(M_n(A)).
ComparisonReport moritaCompare(const AlgebraSpec& a, std::size_t n, std::size_t topDegree,
                               std::size_t budget = kDefaultHHBudget);

} // namespace conesigma
