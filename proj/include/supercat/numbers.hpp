// Tangent, Genocchi and q-tangent number generators, extracted from the
// series quotients that define them.

#pragma once

#include "supercat/series.hpp"

#include <stdexcept>
#include <vector>

namespace supercat {

/// e^z truncated at the given order (factorial normalization).
inline Series<Rational> exp_series(int order) {
    return Series<Rational>::build(order, SeriesNorm::Factorial, [](int n) {
        return Rational(1) / Rational(factorial(n));
    });
}

/// e_q(z) = sum z^n/[n]!.
inline Series<QRat> e_q_series(int order) {
    return Series<QRat>::build(order, SeriesNorm::Factorial, [](int n) {
        return QRat(QPoly(1), q_factorial(n));
    });
}

/// tanh z = (e^z - e^-z)/(e^z + e^-z).
inline Series<Rational> tanh_series(int order) {
    Series<Rational> e = exp_series(order);
    Series<Rational> em = e.negate_argument();
    return (e - em) / (e + em);
}

/// (e_q(z) - e_q(-z))/(e_q(z) + e_q(-z)).
inline Series<QRat> q_tanh_series(int order) {
    Series<QRat> e = e_q_series(order);
    Series<QRat> em = e.negate_argument();
    return (e - em) / (e + em);
}

/// T_1, T_3, ..., T_{2*count-1}: tanh z = sum (-1)^n T_{2n+1} z^(2n+1)/(2n+1)!.
inline std::vector<Rational> tangent_numbers(int count) {
    if (count < 1) throw std::invalid_argument("tangent_numbers: count must be >= 1");
    Series<Rational> th = tanh_series(2 * count - 1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        Rational t = th.coeff_normalized(2 * n + 1);
        if (n % 2 == 1) t = -t;
        out.push_back(t);
    }
    return out;
}

/// G_0, G_2, ...: z tanh z = sum (-1)^(n-1) 2^(2n-1) G_{2n} z^(2n)/(2n)!.
inline std::vector<Rational> genocchi_numbers(int count) {
    if (count < 1) throw std::invalid_argument("genocchi_numbers: count must be >= 1");
    Series<Rational> zt = tanh_series(2 * count).shift_up(1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        Rational g = zt.coeff_normalized(2 * n);
        if (n % 2 == 0) g = -g;  // (-1)^(n-1)
        g /= pow_rational(Rational(2), 2 * n - 1);
        out.push_back(g);
    }
    return out;
}

/// Genocchi numbers relate to tangent numbers by G_{2n+2} = (n+1) T_{2n+1} / 2^(2n).
inline Rational genocchi_from_tangent(int n, const Rational& t_2n_plus_1) {
    return Rational(n + 1) * t_2n_plus_1 / Rational(pow_int(Int(2), 2 * n));
}

/// T_1(q), T_3(q), ...; each extracted value must come out a polynomial in q.
inline std::vector<QPoly> q_tangent_numbers(int count) {
    if (count < 1) throw std::invalid_argument("q_tangent_numbers: count must be >= 1");
    Series<QRat> th = q_tanh_series(2 * count - 1);
    std::vector<QPoly> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        QRat t = th.coeff_normalized(2 * n + 1);
        if (n % 2 == 1) t = -t;
        if (!t.is_polynomial())
            throw std::domain_error("q_tangent_numbers: non-polynomial value (arithmetic bug)");
        out.push_back(t.as_polynomial());
    }
    return out;
}

}  // namespace supercat
