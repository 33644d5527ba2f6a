#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace hrush {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q" and "-p/q"; throws InputError otherwise.
Rational parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);

bool is_integer(const Rational& value);

inline std::strong_ordering compare(const Rational& a, const Rational& b)
{
    if (a < b)
        return std::strong_ordering::less;
    return a == b ? std::strong_ordering::equal : std::strong_ordering::greater;
}

// Narrowing conversion that throws InputError when the value does not fit.
std::int64_t to_int64(const Integer& value);

} // namespace hrush
