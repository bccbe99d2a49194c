// The rational-function field Q(q). Canonical form: num/den fully reduced,
// denominator monic. Equality is structural comparison of the canonical form.

#pragma once

#include "supercat/qpoly.hpp"

#include <stdexcept>
#include <utility>

namespace supercat {

/// Evaluation at a zero of the denominator.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

class QRat {
public:
    QRat() : num_(), den_(1) {}
    explicit QRat(const Rational& c) : num_(c), den_(1) {}
    explicit QRat(int c) : num_(c), den_(1) {}
    explicit QRat(QPoly numerator) : num_(std::move(numerator)), den_(1) {}
    QRat(const QPoly& numerator, const QPoly& denominator) { normalize(numerator, denominator); }

    static QRat variable() { return QRat(QPoly::variable()); }

    /// q^e; negative e gives denominator q^(-e).
    static QRat q_power(int e) {
        if (e >= 0) return QRat(QPoly::monomial(e, Rational(1)));
        QRat out;
        out.num_ = QPoly(1);
        out.den_ = QPoly::monomial(-e, Rational(1));
        return out;
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// The underlying polynomial when den == 1; throws otherwise.
    const QPoly& as_polynomial() const {
        if (!is_polynomial()) throw std::logic_error("QRat::as_polynomial: denominator is not 1");
        return num_;
    }

    friend QRat operator+(const QRat& a, const QRat& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.is_polynomial() && b.is_polynomial()) return QRat(a.num_ + b.num_);
        // Henrici: with reduced inputs, gcd(numerator, full den) = gcd(numerator, g).
        QPoly g = gcd(a.den_, b.den_);
        QPoly d1 = QPoly::div_exact(a.den_, g);
        QPoly d2 = QPoly::div_exact(b.den_, g);
        QPoly numerator = a.num_ * d2 + b.num_ * d1;
        if (numerator.is_zero()) return QRat();
        QPoly h = gcd(numerator, g);
        QRat out;
        out.num_ = QPoly::div_exact(numerator, h);
        out.den_ = QPoly::div_exact(a.den_, h) * d2;
        out.make_monic();
        return out;
    }

    friend QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

    QRat operator-() const {
        QRat out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend QRat operator*(const QRat& a, const QRat& b) {
        if (a.is_zero() || b.is_zero()) return QRat();
        QPoly g1 = gcd(a.num_, b.den_);
        QPoly g2 = gcd(b.num_, a.den_);
        QRat out;
        out.num_ = QPoly::div_exact(a.num_, g1) * QPoly::div_exact(b.num_, g2);
        out.den_ = QPoly::div_exact(a.den_, g2) * QPoly::div_exact(b.den_, g1);
        out.make_monic();
        return out;
    }

    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw std::invalid_argument("QRat: division by zero");
        if (a.is_zero()) return QRat();
        QRat inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        inv.make_monic();
        return a * inv;
    }

    QRat& operator+=(const QRat& b) { return *this = *this + b; }
    QRat& operator-=(const QRat& b) { return *this = *this - b; }
    QRat& operator*=(const QRat& b) { return *this = *this * b; }
    QRat& operator/=(const QRat& b) { return *this = *this / b; }

    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    QRat pow(int e) const {
        if (e < 0) return QRat(1) / this->pow(-e);
        QRat result(1), base = *this;
        int rest = e;
        while (rest > 0) {
            if (rest & 1) result *= base;
            rest >>= 1;
            if (rest > 0) base *= base;
        }
        return result;
    }

    /// Exact evaluation; pole reported distinctly.
    Rational eval_at_q(const Rational& q0) const {
        Rational d = den_.eval(q0);
        if (d == 0) throw PoleError("QRat::eval_at_q: pole at q0 = " + supercat::to_string(q0));
        return num_.eval(q0) / d;
    }

private:
    QPoly num_;
    QPoly den_;

    void normalize(const QPoly& numerator, const QPoly& denominator) {
        if (denominator.is_zero()) throw std::invalid_argument("QRat: zero denominator");
        if (numerator.is_zero()) {
            num_ = QPoly();
            den_ = QPoly(1);
            return;
        }
        QPoly g = gcd(numerator, denominator);
        num_ = QPoly::div_exact(numerator, g);
        den_ = QPoly::div_exact(denominator, g);
        make_monic();
    }

    void make_monic() {
        const Rational lead = den_.leading();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

/// Canonical-form constructor named after the operation it performs.
inline QRat qrat_normalize(const QPoly& num, const QPoly& den) { return QRat(num, den); }

inline QRat q_int_r(int n) { return QRat(q_int(n)); }
inline QRat q_factorial_r(int n) { return QRat(q_factorial(n)); }

/// [hi]!/[lo]! for any hi, lo >= 0 (reciprocal when hi < lo).
inline QRat q_factorial_ratio_r(int hi, int lo) {
    if (hi >= lo) return QRat(q_factorial_ratio(hi, lo));
    return QRat(QPoly(1), q_factorial_ratio(lo, hi));
}

}  // namespace supercat
