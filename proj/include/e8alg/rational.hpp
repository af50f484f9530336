#pragma once

// Exact rational scalars. Everything algebraic in this library runs on
// arbitrary-precision rationals kept in lowest terms with positive
// denominator; floating point only ever appears in the root-extraction
// step, which re-validates its output.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace e8alg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

// Accumulation helpers. boost's rational addition runs the full
// cross-multiply + gcd path even when one side is zero; the zero cases
// dominate sparse matrix work, so short-circuit them.
inline void add_assign(Rational& dst, const Rational& src) {
    if (src.is_zero()) return;
    if (dst.is_zero())
        dst = src;
    else
        dst += src;
}

inline void sub_assign(Rational& dst, const Rational& src) {
    if (src.is_zero()) return;
    if (dst.is_zero())
        dst = -src;
    else
        dst -= src;
}

inline Rational sum(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return a + b;
}

inline Rational difference(const Rational& a, const Rational& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return a - b;
}

/// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) {
        s += '/';
        s += rat_den(r).str();
    }
    return s;
}

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p" or "p/q" with optional leading sign on p and q >= 1.
/// Input need not be in lowest terms; the result always is.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&](const char* why) {
        throw FormatError("invalid rational \"" + std::string(text) + "\": " + why);
    };
    const auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_integer(num)) bad("numerator is not an integer");
    if (!is_integer(den)) bad("denominator is not an integer");
    BigInt d{std::string(den)};
    if (d <= 0) bad("denominator must be positive");
    return Rational(BigInt{std::string(num)}, d);
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

} // namespace e8alg
