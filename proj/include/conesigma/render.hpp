#pragma once

#include "conesigma/cone.hpp"

#include <string>

namespace conesigma {

// {"rows": n, "cols": n, "entries": [[i, j, "value"], ...]} with the
// nonzero entries of the n x n window in row-major order.
std::string renderWindowJson(const ConeMat& a, Index n);

// Dense n x n comma-separated block, one row per line.
std::string renderWindowCsv(const ConeMat& a, Index n);

} // namespace conesigma
