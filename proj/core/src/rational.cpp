#include "threebox/rational.hpp"

#include <cctype>

#include "threebox/error.hpp"

namespace threebox {

std::string to_fraction_string(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

std::string to_display_string(const Rational& value) {
    if (boost::multiprecision::denominator(value) == 1) {
        return boost::multiprecision::numerator(value).str();
    }
    return to_fraction_string(value);
}

namespace {

bool is_integer_literal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view{"1"}
                                                          : text.substr(slash + 1);
    if (!is_integer_literal(num_text) || !is_integer_literal(den_text) ||
        den_text.front() == '-' || den_text.front() == '+') {
        throw ParseError("malformed rational '" + std::string(text) +
                         "' (expected num/den)");
    }
    std::string num(num_text);
    if (num.front() == '+') {
        num.erase(0, 1);
    }
    BigInt numerator(num);
    BigInt denominator{std::string(den_text)};
    if (denominator == 0) {
        throw ParseError("zero denominator in rational '" + std::string(text) + "'");
    }
    return Rational(numerator, denominator);
}

}  // namespace threebox
