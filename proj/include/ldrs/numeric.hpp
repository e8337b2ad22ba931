#pragma once

// Exact integer and rational helpers shared by every module.

#include "ldrs/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace ldrs {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using u128 = unsigned __int128;

inline std::string to_decimal(const Integer& v) { return v.str(); }

inline Integer to_integer(u128 v) {
    Integer out = static_cast<std::uint64_t>(v >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(v);
    return out;
}

inline Integer parse_integer(std::string_view text) {
    if (text.empty()) throw UsageError("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw UsageError("malformed integer literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw UsageError("malformed integer literal '" + std::string(text) + "'");
    return Integer(std::string(text));
}

/// Parses "n", "n/d" or a terminating decimal "0.5" without going through floating point.
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string digits(text.substr(0, dot));
        std::string frac(text.substr(dot + 1));
        if (frac.empty()) throw UsageError("malformed decimal '" + std::string(text) + "'");
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        Integer whole = parse_integer(digits + frac);
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
        return Rational(whole, scale);
    }
    return Rational(parse_integer(text));
}

inline std::string rational_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Integer ipow(const Integer& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

inline Integer ipow(std::uint64_t base, unsigned exp) { return ipow(Integer(base), exp); }

inline Integer binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    Integer out = 1;
    for (unsigned i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

inline Integer factorial(unsigned n) {
    Integer out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

inline Integer floor_of(const Rational& r) {
    Integer n = numerator(r), d = denominator(r);
    Integer q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

/// Largest m >= 0 with m^den <= base^num, i.e. floor(base^(num/den)) for num/den >= 0.
inline Integer floor_rational_power(std::uint64_t base, const Rational& exponent) {
    if (exponent < 0) throw UsageError("negative exponent in floor_rational_power");
    const Integer num = numerator(exponent);
    const Integer den = denominator(exponent);
    if (num > 4096 || den > 4096) throw UsageError("exponent too complex for exact root extraction");
    const unsigned n = num.convert_to<unsigned>();
    const unsigned d = den.convert_to<unsigned>();
    const Integer target = ipow(base, n);
    Integer lo = 0, hi = 1;
    while (ipow(hi, d) <= target) hi *= 2;
    // invariant: lo^d <= target < hi^d
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (ipow(mid, d) <= target) lo = mid;
        else hi = mid;
    }
    return lo;
}

/// Exact test of a^x >= b^y for rational exponents, a,b >= 1.
inline bool power_at_least(const Integer& a, const Rational& x, const Integer& b, const Rational& y) {
    // compare a^(xn/xd) with b^(yn/yd): raise both sides to xd*yd
    const unsigned xn = numerator(x).convert_to<unsigned>(), xd = denominator(x).convert_to<unsigned>();
    const unsigned yn = numerator(y).convert_to<unsigned>(), yd = denominator(y).convert_to<unsigned>();
    return ipow(a, xn * yd) >= ipow(b, yn * xd);
}

inline double to_double(const Integer& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

/// Checked conversion of q^n to a 64-bit bound; returns max() on overflow.
inline std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

} // namespace ldrs
