#ifndef PEBBLING_RATIONAL_HPP
#define PEBBLING_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace pebbling {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" in lowest terms, or "p" for integers.
inline std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p", "-p" or "p/q" with q > 0.
inline Rational parse_rational(const std::string& text) {
    auto parse_int = [&](const std::string& s) {
        const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw std::invalid_argument("malformed rational '" + text + "'");
        return BigInt(s);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational '" + text + "' needs a positive denominator");
    return Rational(parse_int(text.substr(0, slash)), den);
}

/// Largest integer not above q.
inline BigInt floor(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    BigInt quotient = num / den;
    if (num % den != 0 && num < 0) --quotient;
    return quotient;
}

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

}  // namespace pebbling

#endif  // PEBBLING_RATIONAL_HPP
