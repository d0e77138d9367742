#include "conesigma/numeric.hpp"

namespace conesigma {

Rational parseRational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '-') {
        negative = true;
        ++i;
    }
    auto readInt = [&]() {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad rational literal: " + s);
        Int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    };
    Int num = readInt();
    Int den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = readInt();
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    }
    if (i != s.size()) throw std::invalid_argument("bad rational literal: " + s);
    Rational r(num, den);
    return negative ? -r : r;
}

std::string showRational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace conesigma
