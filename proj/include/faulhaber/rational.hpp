#ifndef FAULHABER_RATIONAL_HPP
#define FAULHABER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace faulhaber {

// The universal scalars. cpp_rational keeps values in reduced canonical
// form with a positive denominator, which makes equality bit-exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Converts an integer-valued rational, throwing if a fraction survived.
inline Int to_integer(const Rational& r) {
    if (!is_integer(r))
        throw std::logic_error("expected an integer value, got " + r.str());
    return numerator(r);
}

inline Int ipow(Int base, unsigned exp) {
    Int result = 1;
    while (exp > 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

inline Rational rpow(const Rational& base, unsigned exp) {
    return Rational(ipow(numerator(base), exp), ipow(denominator(base), exp));
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_fraction_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
    return Rational(Int(std::string(s.substr(0, slash))), Int(std::string(s.substr(slash + 1))));
}

}  // namespace faulhaber

#endif
