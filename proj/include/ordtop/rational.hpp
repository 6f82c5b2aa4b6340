#ifndef ORDTOP_RATIONAL_HPP
#define ORDTOP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ordtop/errors.hpp"

namespace ordtop {

// Exact rational arithmetic everywhere; the artifact never touches floating
// point. cpp_rational keeps values reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    return Rational(num, den);
}

// Accepts "p/q" or a plain integer "p".
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ValidationError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ValidationError("bad rational literal: " + text);
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

} // namespace ordtop

#endif
