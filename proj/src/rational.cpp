#include "dstoch/rational.hpp"

#include <cctype>

namespace dstoch {

Rational make_rational(BigInt numerator, BigInt denominator) {
    if (denominator == 0) throw ParseError("zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    return Rational(numerator, denominator);
}

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer");
    std::size_t start = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (start == text.size()) throw ParseError("sign without digits");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("invalid integer '" + std::string(text) + "'");
        }
    }
    return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t");
    std::size_t last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos) throw ParseError("empty rational");
    text = text.substr(first, last - first + 1);

    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    if (text.find('/', slash + 1) != std::string_view::npos) {
        throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(std::move(num), std::move(den));
}

std::string to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

}  // namespace dstoch
