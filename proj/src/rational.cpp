#include "bellkit/rational.hpp"

#include "bellkit/error.hpp"

#include <cctype>
#include <cmath>

namespace bellkit {

namespace {

bool valid_integer_text(const std::string& s, bool allow_minus) {
    std::size_t i = 0;
    if (allow_minus && i < s.size() && s[i] == '-') ++i;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Rat parse_impl(const std::string& text, bool allow_minus) {
    const auto slash = text.find('/');
    const std::string num_text = text.substr(0, slash);
    if (!valid_integer_text(num_text, allow_minus)) {
        throw Error(Errc::parse_error, "bad rational '" + text + "'");
    }
    BigInt num(num_text);
    BigInt den = 1;
    if (slash != std::string::npos) {
        const std::string den_text = text.substr(slash + 1);
        if (!valid_integer_text(den_text, false)) {
            throw Error(Errc::parse_error, "bad rational '" + text + "'");
        }
        den = BigInt(den_text);
        if (den == 0) {
            throw Error(Errc::parse_error, "zero denominator in '" + text + "'");
        }
    }
    return Rat(num, den);
}

}  // namespace

Rat parse_rational(const std::string& text) {
    return parse_impl(text, true);
}

Rat parse_probability(const std::string& text) {
    return parse_impl(text, false);
}

std::string format_rational(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rat& r) {
    return r.convert_to<double>();
}

Rat rational_from_double(double value) {
    if (!std::isfinite(value)) {
        throw Error(Errc::parse_error, "non-finite float value");
    }
    return Rat(value);
}

}  // namespace bellkit
