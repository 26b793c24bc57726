#include "sqr/rational.hpp"

#include <cctype>

#include "sqr/errors.hpp"

namespace sqr {

namespace {

bool valid_integer(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

namespace {

BigInt parse_integer(const std::string& s) {
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer(text))
            throw BadRational("not a rational: '" + text + "'");
        return Rational(parse_integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
        throw BadRational("not a rational: '" + text + "'");
    BigInt d = parse_integer(den);
    if (d == 0)
        throw BadRational("zero denominator: '" + text + "'");
    return Rational(parse_integer(num), d);
}

std::string rational_to_string(const Rational& v) {
    if (denominator(v) == 1)
        return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace sqr
