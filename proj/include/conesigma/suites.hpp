#pragma once

#include "conesigma/cone.hpp"

#include <random>
#include <string>

namespace conesigma {

struct CheckResult {
    std::string name;
    Index window = 0;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool allPass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Suite names: pairing, shift-identities, w-iso, ore, local-units,
// morita-hh, all. Deterministic given the seed.
SuiteReport runSuite(const std::string& name, std::uint64_t seed, Index window);

const std::vector<std::string>& suiteNames();

// Random generators used by the suites and by tests.
using Rng = std::mt19937_64;

AlgElem randomScalar(Rng& rng, const Coefficients& coeff);
FinMat randomFinMat(Rng& rng, CoeffPtr coeff, Index maxIndex, std::size_t maxEntries);
// Lazy band matrix: a few diagonal shifts with periodic entry patterns.
ConeMat randomBandedLazy(Rng& rng, CoeffPtr coeff);

} // namespace conesigma
