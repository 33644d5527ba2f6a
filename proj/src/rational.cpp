#include "hrush/rational.hpp"

#include "hrush/error.hpp"

#include <cctype>
#include <limits>

namespace hrush {

namespace {

Integer parse_integer(const std::string& text, const std::string& whole)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw InputError("malformed rational '" + whole + "'");
    Integer result = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw InputError("malformed rational '" + whole + "'");
        result = result * 10 + (text[pos] - '0');
    }
    return negative ? Integer(-result) : result;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw InputError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value)
{
    if (denominator(value) == 1)
        return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Integer floor(const Rational& value)
{
    Integer q = numerator(value) / denominator(value);
    if (numerator(value) < 0 && q * denominator(value) != numerator(value))
        q -= 1;
    return q;
}

bool is_integer(const Rational& value)
{
    return denominator(value) == 1;
}

std::int64_t to_int64(const Integer& value)
{
    if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
        throw InputError("integer " + value.str() + " out of range");
    return static_cast<std::int64_t>(value);
}

} // namespace hrush
