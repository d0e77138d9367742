#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conesigma {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Index = std::uint64_t;

// Exact floor(sqrt(v)) by Newton iteration.
inline Int isqrt(const Int& v) {
    if (v < 0) throw std::invalid_argument("isqrt: negative argument");
    if (v < 2) return v;
    Int x = v, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + v / x) / 2;
    }
    return x;
}

// Parses "a" or "a/b" with optional leading '-'.
Rational parseRational(const std::string& s);

std::string showRational(const Rational& r);

} // namespace conesigma
