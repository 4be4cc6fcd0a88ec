#include "fhtw/rational.hpp"

#include "fhtw/errors.hpp"

#include <cctype>

namespace fhtw {

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
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

mpz_class parse_integer(std::string_view s) {
    if (s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw InvalidArgument("malformed rational: " + std::string(text));
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-')
        throw InvalidArgument("malformed rational: " + std::string(text));
    mpz_class d = parse_integer(den);
    if (d == 0)
        throw InvalidArgument("zero denominator: " + std::string(text));
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
}

} // namespace fhtw
