// Dense univariate polynomials in the indeterminate q over Rational, plus the
// q-combinatorial primitives: [n], [n]!, Gaussian binomials and (a;q)_n for
// a = +-q^e.
//
// Polynomial gcd works on primitive integer images of the operands (content
// is managed at every pseudo-division step), which keeps coefficients small
// enough for the high-degree denominators the q-identities produce.

#pragma once

#include "supercat/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supercat {

class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rational& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }
    explicit QPoly(int constant) : QPoly(Rational(constant)) {}
    explicit QPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static QPoly variable() { return monomial(1, Rational(1)); }

    static QPoly monomial(int exponent, const Rational& coeff) {
        if (exponent < 0) throw std::invalid_argument("QPoly::monomial: negative exponent");
        if (coeff == 0) return QPoly();
        QPoly p;
        p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
        p.coeffs_.back() = coeff;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// Degree of a nonzero polynomial. The zero polynomial has no degree.
    int degree() const {
        if (is_zero()) throw std::logic_error("QPoly::degree: zero polynomial");
        return static_cast<int>(coeffs_.size()) - 1;
    }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const Rational& leading() const {
        if (is_zero()) throw std::logic_error("QPoly::leading: zero polynomial");
        return coeffs_.back();
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly out;
        out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
        out.trim();
        return out;
    }

    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

    QPoly operator-() const {
        QPoly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        QPoly out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;  // deg additivity: no trailing zero possible over a field
    }

    friend QPoly operator*(const QPoly& a, const Rational& c) {
        if (c == 0) return QPoly();
        QPoly out = a;
        for (auto& x : out.coeffs_) x *= c;
        return out;
    }
    friend QPoly operator*(const Rational& c, const QPoly& a) { return a * c; }

    QPoly& operator+=(const QPoly& b) { return *this = *this + b; }
    QPoly& operator-=(const QPoly& b) { return *this = *this - b; }
    QPoly& operator*=(const QPoly& b) { return *this = *this * b; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Multiplication by q^k.
    QPoly shifted(int k) const {
        if (k < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
        if (is_zero()) return QPoly();
        QPoly out;
        out.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
        out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return out;
    }

    QPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("QPoly::pow: negative exponent");
        QPoly result(1), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    Rational eval(const Rational& q0) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
        return acc;
    }

    /// Euclidean division over the coefficient field: a = q*b + r, deg r < deg b.
    static std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
        if (b.is_zero()) throw std::invalid_argument("QPoly::divrem: division by zero");
        QPoly rem = a, quot;
        if (a.is_zero() || a.degree() < b.degree()) return {QPoly(), rem};
        quot.coeffs_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
        const Rational inv_lead = Rational(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            Rational factor = rem.leading() * inv_lead;
            quot.coeffs_[static_cast<std::size_t>(shift)] = factor;
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
                rem.coeffs_[static_cast<std::size_t>(shift) + i] -= factor * b.coeffs_[i];
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }

    /// Exact quotient; throws if b does not divide a.
    static QPoly div_exact(const QPoly& a, const QPoly& b) {
        auto [quot, rem] = divrem(a, b);
        if (!rem.is_zero()) throw std::logic_error("QPoly::div_exact: inexact division");
        return quot;
    }

private:
    std::vector<Rational> coeffs_;  // ascending powers of q, no trailing zeros

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

// --- gcd over primitive integer polynomials -------------------------------

namespace detail {

using ZPoly = std::vector<Int>;  // ascending, possibly with trailing zeros mid-algorithm

inline void z_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Int z_content(const ZPoly& p) {
    Int g = 0;
    for (const Int& c : p) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

inline void z_make_primitive(ZPoly& p) {
    z_trim(p);
    if (p.empty()) return;
    Int g = z_content(p);
    if (p.back() < 0) g = -g;  // positive leading coefficient
    if (g != 1)
        for (Int& c : p) c /= g;
}

/// Pseudo-remainder of a by b (deg a >= deg b > 0 not required; handles all).
inline ZPoly z_prem(ZPoly a, const ZPoly& b) {
    z_trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const Int& lead_b = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const Int lead_a = a.back();
        for (Int& c : a) c *= lead_b;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(shift + i)] -= lead_a * b[static_cast<std::size_t>(i)];
        z_trim(a);
    }
    return a;
}

/// Primitive integer image of a rational-coefficient polynomial.
inline ZPoly z_image(const QPoly& p) {
    ZPoly out;
    if (p.is_zero()) return out;
    Int scale = 1;
    for (const Rational& c : p.coefficients()) scale = lcm(scale, denominator(c));
    out.reserve(p.coefficients().size());
    for (const Rational& c : p.coefficients())
        out.push_back(numerator(c) * (scale / denominator(c)));
    z_make_primitive(out);
    return out;
}

inline QPoly z_to_qpoly(const ZPoly& p) {
    std::vector<Rational> coeffs;
    coeffs.reserve(p.size());
    for (const Int& c : p) coeffs.emplace_back(c);
    return QPoly(std::move(coeffs));
}

}  // namespace detail

/// Primitive gcd with positive leading coefficient (content-managed Euclid).
inline QPoly gcd(const QPoly& a, const QPoly& b) {
    detail::ZPoly u = detail::z_image(a), v = detail::z_image(b);
    if (u.empty()) return detail::z_to_qpoly(v);
    if (v.empty()) return detail::z_to_qpoly(u);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        detail::ZPoly r = detail::z_prem(u, v);
        detail::z_make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    return detail::z_to_qpoly(u);
}

// --- q-combinatorics -------------------------------------------------------

/// [n] = 1 + q + ... + q^(n-1); [0] is the zero polynomial.
inline QPoly q_int(int n) {
    if (n < 0) throw std::invalid_argument("q_int: negative argument");
    return QPoly(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

inline const QPoly& q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    static std::vector<QPoly> table = {QPoly(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * q_int(static_cast<int>(table.size())));
    return table[static_cast<std::size_t>(n)];
}

/// [hi]!/[lo]! = [lo+1][lo+2]...[hi] for hi >= lo >= 0.
inline QPoly q_factorial_ratio(int hi, int lo) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("q_factorial_ratio: need hi >= lo >= 0");
    QPoly out(1);
    for (int i = lo + 1; i <= hi; ++i) out *= q_int(i);
    return out;
}

/// Gaussian binomial coefficient; rejects out-of-range k.
inline QPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("q_binomial: k out of range");
    if (k > n - k) k = n - k;
    // [n]!/([k]![n-k]!) = ([n-k+1]...[n]) / [k]!, exact over Q[q]
    return QPoly::div_exact(q_factorial_ratio(n, n - k), q_factorial(k));
}

/// Out-of-range k contributes 0 under the usual sum conventions.
inline QPoly q_binomial_or_zero(int n, int k) {
    if (k < 0 || k > n) return QPoly();
    return q_binomial(n, k);
}

/// sign * q^exponent with sign in {-1,+1}; (−1) is sign −1, exponent 0.
struct SignedQMonomial {
    int sign = 1;
    int exponent = 0;

    SignedQMonomial(int sign_, int exponent_) : sign(sign_), exponent(exponent_) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("SignedQMonomial: sign must be +-1");
        if (exponent < 0) throw std::invalid_argument("SignedQMonomial: negative exponent");
    }

    QPoly as_poly() const { return QPoly::monomial(exponent, Rational(sign)); }
};

/// (a;q)_n = (1-a)(1-qa)...(1-q^(n-1)a).
inline QPoly q_pochhammer(const SignedQMonomial& a, int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: negative length");
    QPoly out(1);
    for (int j = 0; j < n; ++j) {
        // 1 - q^j * a = 1 - sign * q^(exponent + j)
        QPoly term = QPoly(1) - QPoly::monomial(a.exponent + j, Rational(a.sign));
        out *= term;
    }
    return out;
}

/// [1][3]...[2n-1], the q-analogue of the odd double factorial.
inline QPoly q_odd_double_factorial(int n) {
    QPoly out(1);
    for (int j = 1; j < 2 * n; j += 2) out *= q_int(j);
    return out;
}

}  // namespace supercat
