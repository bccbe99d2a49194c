// Arbitrary-precision exact rationals and the small integer combinatorics
// (factorials, binomials, double factorials) everything else is built on.
//
// The scalar itself is boost::multiprecision's cpp_rational, which already
// maintains the canonical form we need: fully reduced, denominator >= 1.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// p/q with any sign of q (q != 0), normalized.
inline Rational make_rational(const Int& p, const Int& q) {
    if (q == 0) throw std::invalid_argument("make_rational: zero denominator");
    return Rational(p) / Rational(q);
}

inline const Int& numerator_of(const Rational& r) { return numerator(r); }
inline const Int& denominator_of(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Int pow_int(const Int& base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int result = 1, b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        b *= b;
    }
    return result;
}

/// r^e, negative e allowed for nonzero r.
inline Rational pow_rational(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("pow_rational: 0^negative");
        return make_rational(pow_int(denominator(base), -exp),
                             pow_int(numerator(base), -exp));
    }
    return make_rational(pow_int(numerator(base), exp), pow_int(denominator(base), exp));
}

inline const Int& factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    static std::vector<Int> table = {1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * static_cast<int>(table.size()));
    return table[static_cast<std::size_t>(n)];
}

/// n!/k! for n >= k >= 0 (falling product), without building big factorials.
inline Int factorial_ratio(int n, int k) {
    if (k < 0 || n < k) throw std::invalid_argument("factorial_ratio: need n >= k >= 0");
    Int result = 1;
    for (int i = k + 1; i <= n; ++i) result *= i;
    return result;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact at every step
    }
    return result;
}

/// (2n-1)!! = 1*3*5*...*(2n-1); empty product for n = 0.
inline Int odd_double_factorial(int n) {
    Int result = 1;
    for (int j = 1; j < 2 * n; j += 2) result *= j;
    return result;
}

inline Rational catalan_number(int n) {
    return make_rational(binomial(2 * n, n), Int(n + 1));
}

/// Canonical rendering: "p" or "p/q", denominator positive.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Accepts "p", "p/q", optional leading sign. Throws on anything else.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int p(text.substr(0, slash));
        Int q(text.substr(slash + 1));
        return make_rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    }
}

}  // namespace supercat
