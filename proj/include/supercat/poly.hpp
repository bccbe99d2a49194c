// Dense univariate polynomials in x over a scalar field, and the
// q-differentiation operator D_q f(x) = (f(x) - f(qx)) / ((1-q)x).

#pragma once

#include "supercat/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace supercat {

template <ScalarField S>
class Poly {
public:
    Poly() = default;
    explicit Poly(const S& constant) {
        if (!(constant == scalar_traits<S>::zero())) coeffs_.push_back(constant);
    }
    explicit Poly(std::vector<S> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Poly x_power(int n) {
        if (n < 0) throw std::invalid_argument("Poly::x_power: negative exponent");
        std::vector<S> c(static_cast<std::size_t>(n) + 1, scalar_traits<S>::zero());
        c.back() = scalar_traits<S>::one();
        return Poly(std::move(c));
    }

    static Poly variable() { return x_power(1); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of a nonzero polynomial; the zero polynomial has no degree.
    int degree() const {
        if (is_zero()) throw std::logic_error("Poly::degree: zero polynomial");
        return static_cast<int>(coeffs_.size()) - 1;
    }

    S coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return scalar_traits<S>::zero();
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<S>& coefficients() const { return coeffs_; }

    bool is_monic() const {
        return !is_zero() && coeffs_.back() == scalar_traits<S>::one();
    }

    /// All nonzero coefficients sit at indices congruent to p mod 2.
    bool has_parity(int p) const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (static_cast<int>(i % 2) != (p & 1) && !(coeffs_[i] == scalar_traits<S>::zero()))
                return false;
        return true;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<S> c(std::max(a.coeffs_.size(), b.coeffs_.size()), scalar_traits<S>::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = c[i] + a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        Poly out = *this;
        for (auto& c : out.coeffs_) c = scalar_traits<S>::zero() - c;
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<S> c(a.coeffs_.size() + b.coeffs_.size() - 1, scalar_traits<S>::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == scalar_traits<S>::zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const S& c) {
        Poly out = a;
        for (auto& v : out.coeffs_) v = v * c;
        out.trim();
        return out;
    }
    friend Poly operator*(const S& c, const Poly& a) { return a * c; }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// f(c*x).
    Poly compose_scale(const S& c) const {
        Poly out = *this;
        S p = scalar_traits<S>::one();
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
            out.coeffs_[i] = out.coeffs_[i] * p;
            p = p * c;
        }
        out.trim();
        return out;
    }

    S evaluate(const S& x0) const {
        S acc = scalar_traits<S>::zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
        return acc;
    }

private:
    std::vector<S> coeffs_;  // ascending powers of x, no trailing zeros

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == scalar_traits<S>::zero()) coeffs_.pop_back();
    }
};

/// D_q: the coefficient of x^(n-1) in D_q f is [n] times the x^n coefficient.
inline Poly<QRat> d_q(const Poly<QRat>& f) {
    if (f.is_zero() || f.degree() == 0) return Poly<QRat>();
    std::vector<QRat> out(static_cast<std::size_t>(f.degree()), QRat());
    for (int n = 1; n <= f.degree(); ++n)
        out[static_cast<std::size_t>(n - 1)] = QRat(q_int(n)) * f.coeff(n);
    return Poly<QRat>(std::move(out));
}

/// Lift a Rational-coefficient polynomial into the QRat field.
inline Poly<QRat> lift_to_qrat(const Poly<Rational>& f) {
    std::vector<QRat> c;
    c.reserve(f.coefficients().size());
    for (const Rational& v : f.coefficients()) c.emplace_back(v);
    return Poly<QRat>(std::move(c));
}

/// Evaluate every QRat coefficient at q0 (throws PoleError on a pole).
inline Poly<Rational> eval_coeffs_at_q(const Poly<QRat>& f, const Rational& q0) {
    std::vector<Rational> c;
    c.reserve(f.coefficients().size());
    for (const QRat& v : f.coefficients()) c.push_back(v.eval_at_q(q0));
    return Poly<Rational>(std::move(c));
}

}  // namespace supercat
