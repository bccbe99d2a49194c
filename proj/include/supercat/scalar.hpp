// Traits unifying the two scalar fields (Rational and QRat) the polynomial
// and series templates are instantiated with.

#pragma once

#include "supercat/qrat.hpp"
#include "supercat/rational.hpp"

namespace supercat {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long v) { return Rational(v); }
    /// The factorial the "factorial" series normalization refers to: n!.
    static Rational norm_factorial(int n) { return Rational(factorial(n)); }
    static constexpr const char* name = "rational";
};

template <>
struct scalar_traits<QRat> {
    static QRat zero() { return QRat(); }
    static QRat one() { return QRat(1); }
    static QRat from_int(long v) { return QRat(Rational(v)); }
    /// The factorial the "factorial" series normalization refers to: [n]!.
    static QRat norm_factorial(int n) { return QRat(q_factorial(n)); }
    static constexpr const char* name = "qrat";
};

template <class S>
concept ScalarField = requires(const S a, const S b) {
    { scalar_traits<S>::zero() } -> std::same_as<S>;
    { scalar_traits<S>::one() } -> std::same_as<S>;
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { a / b } -> std::same_as<S>;
    { a == b };
};

}  // namespace supercat
