#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace btoep {

// Exact arbitrary-precision arithmetic. The rational backend keeps the
// invariants we rely on everywhere (denominator > 0, fraction always
// reduced), so every comparison below is a statement about the mathematical
// value, not a float. Expression templates are off: arithmetic results are
// plain values, so std::min/max, ternaries and braced lists behave normally.
using Int = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const Int& x) { return x.sign(); }

inline Int num(const Rational& x) { return numerator(x); }
inline Int den(const Rational& x) { return denominator(x); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

// Exact embedding of a binary64 value into the rationals. Every finite double
// is a dyadic rational, so no information is lost; this is what makes "float
// entry, exact analysis" coherent.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("rational_from_double: value is not finite");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [1/2, 1)
    // 53 doublings make the mantissa integral.
    auto mant_int = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(mant_int);
    if (exp > 0)
        r *= Rational(Int(1) << exp);
    else if (exp < 0)
        r /= Rational(Int(1) << -exp);
    return r;
}

// Accepts "p", "-p", "p/q" with arbitrary-precision integers, or a decimal /
// scientific literal. Decimal input is read as binary64 and embedded exactly;
// the caller can detect that case via `was_decimal` to flag float mode.
inline Rational parse_rational(const std::string& text, bool* was_decimal = nullptr) {
    if (was_decimal) *was_decimal = false;
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");

    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string p = text.substr(0, slash);
        const std::string q = text.substr(slash + 1);
        if (p.empty() || q.empty())
            throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
        try {
            Int pi(p), qi(q);
            if (qi == 0)
                throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
            if (qi < 0) {  // the backend insists on a positive denominator
                pi = -pi;
                qi = -qi;
            }
            return Rational(pi, qi);
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
        }
    }

    const bool plain_integer = text.find_first_not_of("+-0123456789") == std::string::npos &&
                               text.find_first_of("0123456789") != std::string::npos &&
                               text.find_first_of("+-", 1) == std::string::npos;
    if (plain_integer) {
        try {
            return Rational(Int(text));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("parse_rational: malformed integer '" + text + "'");
        }
    }

    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    }
    if (consumed != text.size())
        throw std::invalid_argument("parse_rational: trailing characters in '" + text + "'");
    if (was_decimal) *was_decimal = true;
    return rational_from_double(value);
}

// Canonical "p/q" (or bare "p") rendering; parse_rational round-trips it.
inline std::string to_string(const Rational& x) {
    std::string out = num(x).str();
    if (den(x) != 1) {
        out += '/';
        out += den(x).str();
    }
    return out;
}

}  // namespace btoep
