#include "conesigma/render.hpp"

#include <nlohmann/json.hpp>

namespace conesigma {

std::string renderWindowJson(const ConeMat& a, Index n) {
    nlohmann::json j;
    j["rows"] = n;
    j["cols"] = n;
    nlohmann::json entries = nlohmann::json::array();
    for (Index i = 0; i < n; ++i)
        for (Index col : a.rowSupport(i)) {
            if (col >= n) continue;
            AlgElem v = a.entry(i, col);
            if (a.coeff()->isZero(v)) continue;
            entries.push_back({i, col, a.coeff()->show(v)});
        }
    j["entries"] = std::move(entries);
    return j.dump();
}

std::string renderWindowCsv(const ConeMat& a, Index n) {
    auto block = windowRender(a, 0, n, 0, n);
    std::string out;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (j) out += ",";
            out += a.coeff()->show(block[i][j]);
        }
        out += "\n";
    }
    return out;
}

} // namespace conesigma
