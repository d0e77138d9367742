#include "conesigma/coeff.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace conesigma {

namespace {

bool isPrime(Index p) {
    if (p < 2) return false;
    for (Index d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Int modReduce(Int v, Index p) {
    Int m = v % Int(p);
    if (m < 0) m += Int(p);
    return m;
}

// Inverse of a mod p by extended Euclid; a must be nonzero mod p.
Int modInverse(Int a, Index p) {
    Int t = 0, newt = 1, r = Int(p), newr = modReduce(std::move(a), p);
    while (newr != 0) {
        Int q = r / newr;
        Int tmp = t - q * newt;
        t = std::move(newt);
        newt = std::move(tmp);
        tmp = r - q * newr;
        r = std::move(newr);
        newr = std::move(tmp);
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return modReduce(std::move(t), p);
}

} // namespace

CoeffRing CoeffRing::integersModP(Index p) {
    if (!isPrime(p)) throw std::invalid_argument("modulus must be prime");
    return CoeffRing(Kind::IntegersModP, p);
}

CoeffRing CoeffRing::parse(const std::string& name) {
    if (name == "Q") return rationals();
    if (name == "Z") return integers();
    if (name.rfind("Zp:", 0) == 0) {
        Index p = 0;
        std::istringstream in(name.substr(3));
        if (!(in >> p) || !in.eof()) throw std::invalid_argument("bad ring name: " + name);
        return integersModP(p);
    }
    throw std::invalid_argument("unknown ring: " + name + " (expected Q, Z or Zp:<p>)");
}

Rational CoeffRing::normalize(const Rational& v) const {
    switch (kind_) {
        case Kind::Rationals:
            return v;
        case Kind::Integers:
            if (denominator(v) != 1) throw std::domain_error("non-integer value over Z");
            return v;
        case Kind::IntegersModP: {
            Int num = modReduce(numerator(v), p_);
            Int den = modReduce(denominator(v), p_);
            return Rational(modReduce(num * modInverse(den, p_), p_), 1);
        }
    }
    throw std::logic_error("unreachable");
}

Rational CoeffRing::inv(const Rational& a) const {
    switch (kind_) {
        case Kind::Rationals:
            if (a == 0) throw std::domain_error("division by zero");
            return 1 / a;
        case Kind::Integers:
            if (a == 1 || a == -1) return a;
            throw std::domain_error("not invertible over Z");
        case Kind::IntegersModP: {
            Rational n = normalize(a);
            if (n == 0) throw std::domain_error("division by zero");
            return Rational(modInverse(numerator(n), p_), 1);
        }
    }
    throw std::logic_error("unreachable");
}

std::string CoeffRing::name() const {
    switch (kind_) {
        case Kind::Rationals: return "Q";
        case Kind::Integers: return "Z";
        case Kind::IntegersModP: return "Zp:" + std::to_string(p_);
    }
    throw std::logic_error("unreachable");
}

AlgElem algAdd(const AlgElem& a, const AlgElem& b, const AlgebraSpec& spec) {
    if (a.coords.size() != spec.dim() || b.coords.size() != spec.dim())
        throw std::invalid_argument("algAdd: dimension mismatch");
    AlgElem out;
    out.coords.reserve(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i)
        out.coords.push_back(spec.base.add(a.coords[i], b.coords[i]));
    return out;
}

AlgElem algMul(const AlgElem& a, const AlgElem& b, const AlgebraSpec& spec) {
    const std::size_t d = spec.dim();
    if (a.coords.size() != d || b.coords.size() != d)
        throw std::invalid_argument("algMul: dimension mismatch");
    AlgElem out;
    out.coords.assign(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b.coords[j] == 0) continue;
            Rational c = spec.base.mul(a.coords[i], b.coords[j]);
            const auto& row = spec.table[i][j];
            for (std::size_t l = 0; l < d; ++l) {
                if (row[l] == 0) continue;
                out.coords[l] = spec.base.add(out.coords[l], spec.base.mul(c, row[l]));
            }
        }
    }
    return out;
}

ValidationReport algValidate(const AlgebraSpec& spec) {
    const std::size_t d = spec.dim();
    if (d == 0) return {false, "empty basis"};
    if (spec.table.size() != d || spec.unit.size() != d)
        return {false, "table/unit shape mismatch"};
    for (const auto& row : spec.table) {
        if (row.size() != d) return {false, "table shape mismatch"};
        for (const auto& cell : row)
            if (cell.size() != d) return {false, "table shape mismatch"};
    }

    auto basisElem = [&](std::size_t i) {
        AlgElem e;
        e.coords.assign(d, Rational(0));
        e.coords[i] = 1;
        return e;
    };
    AlgElem unit{spec.unit};
    for (auto& c : unit.coords) c = spec.base.normalize(c);

    for (std::size_t i = 0; i < d; ++i) {
        AlgElem ei = basisElem(i);
        if (algMul(unit, ei, spec) != ei || algMul(ei, unit, spec) != ei)
            return {false, "unit law fails at basis element " + std::to_string(i)};
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l) {
                AlgElem lhs = algMul(algMul(basisElem(i), basisElem(j), spec), basisElem(l), spec);
                AlgElem rhs = algMul(basisElem(i), algMul(basisElem(j), basisElem(l), spec), spec);
                if (lhs != rhs)
                    return {false, "associativity fails at triple (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(l) + ")"};
            }
    return {true, "ok"};
}

AlgebraSpec matrixAlgebraSpec(std::size_t n, const AlgebraSpec& inner) {
    if (n == 0) throw std::invalid_argument("matrixAlgebraSpec: n must be positive");
    const std::size_t d = inner.dim();
    const std::size_t dim = n * n * d;
    AlgebraSpec out;
    out.base = inner.base;
    out.basisLabels.reserve(dim);
    // basis index = ((r*n + c)*d + s): matrix unit E_rc tensor inner basis s
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t s = 0; s < d; ++s)
                out.basisLabels.push_back("E" + std::to_string(r) + std::to_string(c) +
                                          (d > 1 ? "*" + inner.basisLabels[s] : ""));
    out.table.assign(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0))));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t s = 0; s < d; ++s) {
                std::size_t i = (r * n + c) * d + s;
                for (std::size_t c2 = 0; c2 < n; ++c2)
                    for (std::size_t s2 = 0; s2 < d; ++s2) {
                        std::size_t j = (c * n + c2) * d + s2; // E_rc * E_c,c2
                        for (std::size_t l = 0; l < d; ++l) {
                            const Rational& v = inner.table[s][s2][l];
                            if (v == 0) continue;
                            out.table[i][j][(r * n + c2) * d + l] = v;
                        }
                    }
            }
    out.unit.assign(dim, Rational(0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < d; ++s) {
            const Rational& v = inner.unit[s];
            if (v == 0) continue;
            out.unit[(r * n + r) * d + s] = v;
        }
    return out;
}

AlgebraSpec matrixAlgebraSpec(std::size_t n, const CoeffRing& inner) {
    return matrixAlgebraSpec(n, groundAlgebra(inner));
}

AlgebraSpec groundAlgebra(const CoeffRing& ring) {
    AlgebraSpec spec;
    spec.base = ring;
    spec.basisLabels = {"1"};
    spec.table = {{{Rational(1)}}};
    spec.unit = {Rational(1)};
    return spec;
}

AlgebraSpec dualNumbersSpec(const CoeffRing& base) {
    AlgebraSpec spec;
    spec.base = base;
    spec.basisLabels = {"1", "x"};
    spec.table.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
    spec.table[0][0][0] = 1;
    spec.table[0][1][1] = 1;
    spec.table[1][0][1] = 1;
    // x*x = 0
    spec.unit = {Rational(1), Rational(0)};
    return spec;
}

AlgebraSpec parseAlgebraSpecFile(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    AlgebraSpec spec;
    spec.base = CoeffRing::parse(j.at("field").get<std::string>());
    for (const auto& b : j.at("basis")) spec.basisLabels.push_back(b.get<std::string>());
    auto readCoord = [](const nlohmann::json& v) {
        if (v.is_number_integer()) return Rational(v.get<long long>());
        return parseRational(v.get<std::string>());
    };
    for (const auto& u : j.at("unit")) spec.unit.push_back(readCoord(u));
    for (const auto& row : j.at("table")) {
        spec.table.emplace_back();
        for (const auto& cell : row) {
            std::vector<Rational> coords;
            for (const auto& v : cell) coords.push_back(readCoord(v));
            spec.table.back().push_back(std::move(coords));
        }
    }
    auto report = algValidate(spec);
    if (!report.pass) throw std::invalid_argument("invalid algebra spec: " + report.message);
    return spec;
}

std::string writeAlgebraSpecFile(const AlgebraSpec& spec) {
    nlohmann::json j;
    j["field"] = spec.base.name();
    j["basis"] = spec.basisLabels;
    nlohmann::json unit = nlohmann::json::array();
    for (const auto& v : spec.unit) unit.push_back(showRational(v));
    j["unit"] = unit;
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : spec.table) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& cell : row) {
            nlohmann::json jcell = nlohmann::json::array();
            for (const auto& v : cell) jcell.push_back(showRational(v));
            jrow.push_back(jcell);
        }
        table.push_back(jrow);
    }
    j["table"] = table;
    return j.dump(2);
}

AlgElem Coefficients::zero() const {
    AlgElem e;
    e.coords.assign(dim(), Rational(0));
    return e;
}

AlgElem Coefficients::one() const {
    if (alg_) {
        AlgElem e{alg_->unit};
        for (auto& c : e.coords) c = ring_.normalize(c);
        return e;
    }
    AlgElem e;
    e.coords = {ring_.normalize(Rational(1))};
    return e;
}

AlgElem Coefficients::fromRational(const Rational& v) const {
    AlgElem e = one();
    for (auto& c : e.coords) c = ring_.mul(c, v);
    return e;
}

AlgElem Coefficients::add(const AlgElem& a, const AlgElem& b) const {
    if (alg_) return algAdd(a, b, *alg_);
    return AlgElem{{ring_.add(a.coords[0], b.coords[0])}};
}

AlgElem Coefficients::sub(const AlgElem& a, const AlgElem& b) const {
    return add(a, neg(b));
}

AlgElem Coefficients::neg(const AlgElem& a) const {
    AlgElem out = a;
    for (auto& c : out.coords) c = ring_.neg(c);
    return out;
}

AlgElem Coefficients::mul(const AlgElem& a, const AlgElem& b) const {
    if (alg_) return algMul(a, b, *alg_);
    return AlgElem{{ring_.mul(a.coords[0], b.coords[0])}};
}

bool Coefficients::isZero(const AlgElem& a) const {
    for (const auto& c : a.coords)
        if (c != 0) return false;
    return true;
}

std::string Coefficients::show(const AlgElem& a) const {
    if (!alg_) return showRational(a.coords[0]);
    std::string out;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        if (!out.empty()) out += "+";
        out += showRational(a.coords[i]) + "*" + alg_->basisLabels[i];
    }
    return out.empty() ? "0" : out;
}

bool Coefficients::sameAs(const Coefficients& other) const {
    if (ring_ != other.ring_) return false;
    if (alg_.has_value() != other.alg_.has_value()) return false;
    if (!alg_) return true;
    return alg_->basisLabels == other.alg_->basisLabels && alg_->table == other.alg_->table &&
           alg_->unit == other.alg_->unit;
}

void requireSame(const Coefficients& a, const Coefficients& b) {
    if (!a.sameAs(b)) throw CoefficientMismatch("coefficient structures differ");
}

} // namespace conesigma
