// Truncated formal power series in z over a scalar field.
//
// Coefficients are stored plain (the actual coefficient of z^n); the
// normalization tag records whether accessors should read them against the
// z^n/n! (resp. z^n/[n]!) convention. Binary operations insist on matching
// tags so the two conventions cannot be mixed silently.

#pragma once

#include "supercat/scalar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace supercat {

enum class SeriesNorm { Ordinary, Factorial };

template <ScalarField S>
class Series {
public:
    Series(int order, SeriesNorm norm)
        : order_(order), norm_(norm),
          coeffs_(static_cast<std::size_t>(order) + 1, scalar_traits<S>::zero()) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
    }

    static Series constant(int order, SeriesNorm norm, const S& value) {
        Series out(order, norm);
        out.coeffs_[0] = value;
        return out;
    }

    static Series one(int order, SeriesNorm norm) {
        return constant(order, norm, scalar_traits<S>::one());
    }

    /// Coefficients from a generator n -> plain coefficient of z^n.
    static Series build(int order, SeriesNorm norm, const std::function<S(int)>& gen) {
        Series out(order, norm);
        for (int n = 0; n <= order; ++n) out.coeffs_[static_cast<std::size_t>(n)] = gen(n);
        return out;
    }

    int order() const { return order_; }
    SeriesNorm norm() const { return norm_; }

    const S& coeff(int n) const {
        check_index(n);
        return coeffs_[static_cast<std::size_t>(n)];
    }

    void set_coeff(int n, const S& v) {
        check_index(n);
        coeffs_[static_cast<std::size_t>(n)] = v;
    }

    /// Coefficient read against the tag: plain * n! (resp. [n]!) when Factorial.
    S coeff_normalized(int n) const {
        check_index(n);
        const S& plain = coeffs_[static_cast<std::size_t>(n)];
        if (norm_ == SeriesNorm::Ordinary) return plain;
        return plain * scalar_traits<S>::norm_factorial(n);
    }

    friend Series operator+(const Series& a, const Series& b) {
        int m = common(a, b);
        Series out(m, a.norm_);
        for (int n = 0; n <= m; ++n)
            out.coeffs_[static_cast<std::size_t>(n)] = a.coeff(n) + b.coeff(n);
        return out;
    }

    friend Series operator-(const Series& a, const Series& b) {
        int m = common(a, b);
        Series out(m, a.norm_);
        for (int n = 0; n <= m; ++n)
            out.coeffs_[static_cast<std::size_t>(n)] = a.coeff(n) - b.coeff(n);
        return out;
    }

    friend Series operator*(const Series& a, const Series& b) {
        int m = common(a, b);
        Series out(m, a.norm_);
        for (int n = 0; n <= m; ++n) {
            S acc = scalar_traits<S>::zero();
            for (int i = 0; i <= n; ++i) acc = acc + a.coeff(i) * b.coeff(n - i);
            out.coeffs_[static_cast<std::size_t>(n)] = acc;
        }
        return out;
    }

    friend Series operator*(const Series& a, const S& c) {
        Series out = a;
        for (auto& v : out.coeffs_) v = v * c;
        return out;
    }
    friend Series operator*(const S& c, const Series& a) { return a * c; }

    /// Power-series division; the divisor needs an invertible constant term.
    friend Series operator/(const Series& a, const Series& b) {
        int m = common(a, b);
        if (b.coeff(0) == scalar_traits<S>::zero())
            throw std::invalid_argument("Series: division by series with zero constant term");
        Series out(m, a.norm_);
        for (int n = 0; n <= m; ++n) {
            S acc = a.coeff(n);
            for (int i = 0; i < n; ++i)
                acc = acc - out.coeffs_[static_cast<std::size_t>(i)] * b.coeff(n - i);
            out.coeffs_[static_cast<std::size_t>(n)] = acc / b.coeff(0);
        }
        return out;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.norm_ == b.norm_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// S(-z).
    Series negate_argument() const {
        Series out = *this;
        for (int n = 1; n <= order_; n += 2)
            out.coeffs_[static_cast<std::size_t>(n)] =
                scalar_traits<S>::zero() - out.coeffs_[static_cast<std::size_t>(n)];
        return out;
    }

    /// S(c*z).
    Series scale_argument(const S& c) const {
        Series out = *this;
        S p = scalar_traits<S>::one();
        for (int n = 0; n <= order_; ++n) {
            out.coeffs_[static_cast<std::size_t>(n)] = out.coeffs_[static_cast<std::size_t>(n)] * p;
            p = p * c;
        }
        return out;
    }

    Series pow(int e) const {
        if (e < 0) throw std::invalid_argument("Series::pow: negative exponent");
        Series result = one(order_, norm_);
        Series base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return result;
    }

    /// Divide by z^k; the first k coefficients must vanish. Order drops by k.
    Series shift_down(int k) const {
        if (k < 0 || k > order_) throw std::invalid_argument("Series::shift_down: bad shift");
        for (int n = 0; n < k; ++n)
            if (!(coeff(n) == scalar_traits<S>::zero()))
                throw std::logic_error("Series::shift_down: nonzero low-order coefficient");
        Series out(order_ - k, norm_);
        for (int n = 0; n <= order_ - k; ++n)
            out.coeffs_[static_cast<std::size_t>(n)] = coeff(n + k);
        return out;
    }

    /// Multiply by z^k at the same order (top k coefficients fall off).
    Series shift_up(int k) const {
        if (k < 0) throw std::invalid_argument("Series::shift_up: bad shift");
        Series out(order_, norm_);
        for (int n = k; n <= order_; ++n)
            out.coeffs_[static_cast<std::size_t>(n)] = coeff(n - k);
        return out;
    }

    Series truncated(int new_order) const {
        if (new_order < 0 || new_order > order_)
            throw std::invalid_argument("Series::truncated: bad order");
        Series out(new_order, norm_);
        for (int n = 0; n <= new_order; ++n)
            out.coeffs_[static_cast<std::size_t>(n)] = coeff(n);
        return out;
    }

private:
    int order_;
    SeriesNorm norm_;
    std::vector<S> coeffs_;

    void check_index(int n) const {
        if (n < 0 || n > order_) throw std::out_of_range("Series: coefficient index out of range");
    }

    static int common(const Series& a, const Series& b) {
        if (a.norm_ != b.norm_)
            throw std::logic_error("Series: mixed normalization tags");
        return std::min(a.order_, b.order_);
    }
};

}  // namespace supercat
