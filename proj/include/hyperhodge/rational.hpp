#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "hyperhodge/errors.hpp"

namespace hyperhodge {

// Exact rational arithmetic; no floating point anywhere in the library.
// cpp_rational keeps values in lowest terms with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer floor_div(const Integer& num, const Integer& den)
{
    Integer q = num / den;
    if ((num % den) != 0 && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

inline Integer floor(const Rational& x)
{
    return floor_div(numerator(x), denominator(x));
}

inline bool is_integer(const Rational& x)
{
    return denominator(x) == 1;
}

// Canonical serialization: "p/q" in lowest terms with positive q,
// or just "p" for integers.
inline std::string to_string(const Rational& x)
{
    return x.str();
}

// Accepts an optionally signed decimal integer "p" or a fraction "p/q"
// with positive decimal q; the value is reduced on input.
inline Rational parse_rational(std::string_view text)
{
    const auto fail = [&] {
        throw Error("ParseError", "not a rational: '" + std::string(text) + "'");
    };

    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        ++pos;
    }
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) {
        fail();
    }
    Integer num(std::string(text.substr(0, pos)));
    Integer den = 1;
    if (pos < text.size()) {
        if (text[pos] != '/') {
            fail();
        }
        ++pos;
        std::size_t den_digits = 0;
        const std::size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++den_digits;
        }
        if (den_digits == 0 || pos != text.size()) {
            fail();
        }
        den = Integer(std::string(text.substr(den_start, den_digits)));
        if (den == 0) {
            throw Error("ParseError", "zero denominator in '" + std::string(text) + "'");
        }
    }
    return Rational(num, den);
}

} // namespace hyperhodge
