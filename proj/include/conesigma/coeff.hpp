#pragma once

#include "conesigma/numeric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace conesigma {

// Exact base rings. All scalar values are stored as exact rationals; the
// ring fixes normalization (mod-p reduction, integrality) and invertibility.
class CoeffRing {
public:
    enum class Kind { Integers, Rationals, IntegersModP };

    static CoeffRing integers() { return CoeffRing(Kind::Integers, 0); }
    static CoeffRing rationals() { return CoeffRing(Kind::Rationals, 0); }
    static CoeffRing integersModP(Index p);

    // Parses "Q", "Z" or "Zp:<p>".
    static CoeffRing parse(const std::string& name);

    Kind kind() const { return kind_; }
    Index modulus() const { return p_; }
    bool isField() const { return kind_ != Kind::Integers; }

    Rational normalize(const Rational& v) const;
    Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
    Rational neg(const Rational& a) const { return normalize(-a); }
    Rational inv(const Rational& a) const;

    std::string name() const;

    friend bool operator==(const CoeffRing&, const CoeffRing&) = default;

private:
    CoeffRing(Kind k, Index p) : kind_(k), p_(p) {}
    Kind kind_;
    Index p_;
};

// Element of a finite-dimensional algebra: coordinates in the AlgebraSpec basis.
// Plain ring scalars are the one-dimensional case.
struct AlgElem {
    std::vector<Rational> coords;
    friend bool operator==(const AlgElem&, const AlgElem&) = default;
};

struct ValidationReport {
    bool pass = true;
    std::string message;
};

// Finite-dimensional unital algebra given by structure constants:
// table[i][j][l] is the coefficient of basis l in e_i * e_j.
struct AlgebraSpec {
    CoeffRing base = CoeffRing::rationals();
    std::vector<std::string> basisLabels;
    std::vector<std::vector<std::vector<Rational>>> table;
    std::vector<Rational> unit;

    std::size_t dim() const { return basisLabels.size(); }
};

AlgElem algMul(const AlgElem& a, const AlgElem& b, const AlgebraSpec& spec);
AlgElem algAdd(const AlgElem& a, const AlgElem& b, const AlgebraSpec& spec);

// Checks associativity over all basis triples and the two unit laws over
// all basis elements; failures carry the first offending triple.
ValidationReport algValidate(const AlgebraSpec& spec);

// M_n(inner): basis = matrix units x inner basis, dim = n^2 * dim(inner).
AlgebraSpec matrixAlgebraSpec(std::size_t n, const AlgebraSpec& inner);
AlgebraSpec matrixAlgebraSpec(std::size_t n, const CoeffRing& inner);

// The ring itself as a 1-dimensional algebra.
AlgebraSpec groundAlgebra(const CoeffRing& ring);

// Q[x]/(x^2) over the given base.
AlgebraSpec dualNumbersSpec(const CoeffRing& base);

// AlgebraSpec file format: JSON with fields "field" ("Q"|"Z"|"Zp:<p>"),
// "basis", "unit", "table"; rationals written "a/b".
AlgebraSpec parseAlgebraSpecFile(const std::string& text);
std::string writeAlgebraSpecFile(const AlgebraSpec& spec);

// Uniform coefficient context for the matrix tower: either a plain ring
// (dim 1) or a finite-dimensional algebra over one. Immutable.
class Coefficients {
public:
    explicit Coefficients(CoeffRing ring) : ring_(ring) {}
    explicit Coefficients(AlgebraSpec spec) : ring_(spec.base), alg_(std::move(spec)) {}

    static std::shared_ptr<const Coefficients> make(CoeffRing ring) {
        return std::make_shared<const Coefficients>(ring);
    }
    static std::shared_ptr<const Coefficients> make(AlgebraSpec spec) {
        return std::make_shared<const Coefficients>(std::move(spec));
    }

    const CoeffRing& base() const { return ring_; }
    bool isAlgebra() const { return alg_.has_value(); }
    const AlgebraSpec& algebra() const { return *alg_; }
    std::size_t dim() const { return alg_ ? alg_->dim() : 1; }

    AlgElem zero() const;
    AlgElem one() const;
    AlgElem fromRational(const Rational& v) const; // v * 1
    AlgElem fromInt(long v) const { return fromRational(Rational(v)); }

    AlgElem add(const AlgElem& a, const AlgElem& b) const;
    AlgElem sub(const AlgElem& a, const AlgElem& b) const;
    AlgElem neg(const AlgElem& a) const;
    AlgElem mul(const AlgElem& a, const AlgElem& b) const;

    bool isZero(const AlgElem& a) const;
    bool eq(const AlgElem& a, const AlgElem& b) const { return a == b; }

    std::string show(const AlgElem& a) const;

    bool sameAs(const Coefficients& other) const;

private:
    CoeffRing ring_;
    std::optional<AlgebraSpec> alg_;
};

using CoeffPtr = std::shared_ptr<const Coefficients>;

struct CoefficientMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void requireSame(const Coefficients& a, const Coefficients& b);

} // namespace conesigma
