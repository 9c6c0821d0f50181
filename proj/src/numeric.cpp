#include "secint/numeric.hpp"

#include "secint/errors.hpp"

#include <cctype>

namespace secint {

long to_long(const Integer& value, const char* what) {
    if (!value.fits_slong_p())
        throw InvalidArgument(std::string(what) + " is out of range: " + value.get_str());
    return value.get_si();
}

unsigned long to_ulong(const Integer& value, const char* what) {
    if (sgn(value) < 0 || !value.fits_ulong_p())
        throw InvalidArgument(std::string(what) + " must be a nonnegative machine-size integer, got " +
                              value.get_str());
    return value.get_ui();
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size())
        throw InvalidArgument("not an integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidArgument("not an integer: '" + text + "'");
    Integer out;
    out.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    return out;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw InvalidArgument("zero denominator in '" + text + "'");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

} // namespace secint
