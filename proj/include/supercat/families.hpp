// Every polynomial family: closed-form constructors, the recurrences that
// rebuild them independently, expansion coefficients, moment functionals and
// special values.

#pragma once

#include "supercat/numbers.hpp"
#include "supercat/poly.hpp"
#include "supercat/series.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercat {

// --- normalized super Catalan numbers ---------------------------------------

/// sigma(m,n) = (2n)! m! / (n! (m+n)!).
inline Rational sigma(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("sigma: negative argument");
    return Rational(factorial_ratio(2 * n, n)) / Rational(factorial_ratio(m + n, m));
}

/// sigma_q(m,n) = [2n]![m]!/([n]![m+n]!).
inline QRat sigma_q(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("sigma_q: negative argument");
    return QRat(q_factorial_ratio(2 * n, n), q_factorial_ratio(m + n, m));
}

// --- recurrence coefficients -------------------------------------------------

/// lambda_n(m) of the classical three-term recurrence; lambda_0(m) = 2/(m+1).
inline Rational lambda_coeff(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("lambda_coeff: negative argument");
    if (n == 0) return make_rational(2, m + 1);
    return make_rational(Int(n + 1) * (n + 2 * m), Int(n + m) * (n + m + 1));
}

/// lambda_n(m,q) = [n+1][n+2m]/([n+m][n+m+1]); lambda_0(0,q) = 2 by the same
/// convention that gives the classical lambda_0(0) = 2.
inline QRat lambda_coeff_q(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("lambda_coeff_q: negative argument");
    if (n == 0 && m == 0) return QRat(2);
    return QRat(q_int(n + 1) * q_int(n + 2 * m), q_int(n + m) * q_int(n + m + 1));
}

/// mu_j(m,q) = lambda_j(m,q) q^(j+1) / ((1+q^(j+m))(1+q^(j+m+1))).
inline QRat mu_coeff_q(int j, int m) {
    QPoly den = (QPoly(1) + QPoly::monomial(j + m, Rational(1))) *
                (QPoly(1) + QPoly::monomial(j + m + 1, Rational(1)));
    return lambda_coeff_q(j, m) * QRat(QPoly::monomial(j + 1, Rational(1)), den);
}

// --- closed-form constructors ------------------------------------------------

inline Poly<Rational> lucas_poly(int n) {
    if (n == 0) return Poly<Rational>(Rational(1));
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; 2 * k <= n; ++k) {
        Rational v = Rational(binomial(n - k, k)) * make_rational(n, n - k);
        if (k % 2) v = -v;
        c[static_cast<std::size_t>(n - 2 * k)] = v;
    }
    return Poly<Rational>(std::move(c));
}

inline Poly<Rational> fibonacci_poly(int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; 2 * k <= n; ++k) {
        Rational v(binomial(n - k, k));
        if (k % 2) v = -v;
        c[static_cast<std::size_t>(n - 2 * k)] = v;
    }
    return Poly<Rational>(std::move(c));
}

/// l_n(x,m,s): coefficient of x^(n-2k) is n!/(k!(n-2k)!) s^k / ((m+n-1)...(m+n-k)).
inline Poly<Rational> l_poly(int n, int m, const Rational& s) {
    if (n < 0 || m < 0) throw std::invalid_argument("l_poly: negative argument");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; 2 * k <= n; ++k) {
        Rational v = Rational(factorial_ratio(n, n - 2 * k)) / Rational(factorial(k));
        v /= Rational(factorial_ratio(m + n - 1, m + n - 1 - k));
        v *= pow_rational(s, k);
        c[static_cast<std::size_t>(n - 2 * k)] = v;
    }
    return Poly<Rational>(std::move(c));
}

inline Poly<Rational> cheb_t_poly(int n) { return l_poly(n, 0, Rational(-1) / 4); }
inline Poly<Rational> cheb_u_poly(int n) { return l_poly(n, 1, Rational(-1) / 4); }

/// v_n(x,m,s) = l_n(x,m,-s/4).
inline Poly<Rational> v_poly(int n, int m, const Rational& s) {
    return l_poly(n, m, -s / 4);
}

/// l_n(x,m,s,q): s^k q^binom(k,2) [n]!/([k]![n-2k]!) [m+n-k-1]!/[m+n-1]!.
inline Poly<QRat> l_q_poly(int n, int m, const QRat& s) {
    if (n < 0 || m < 0) throw std::invalid_argument("l_q_poly: negative argument");
    std::vector<QRat> c(static_cast<std::size_t>(n) + 1, QRat());
    for (int k = 0; 2 * k <= n; ++k) {
        QRat v(q_factorial_ratio(n, n - 2 * k), q_factorial(k));
        v = v / QRat(q_factorial_ratio(m + n - 1, m + n - 1 - k));
        v = v * s.pow(k) * QRat(QPoly::monomial(k * (k - 1) / 2, Rational(1)));
        c[static_cast<std::size_t>(n - 2 * k)] = v;
    }
    return Poly<QRat>(std::move(c));
}

/// h_n(x,s,q): s^k q^binom(k,2) [n]!/([k]![n-2k]!).
inline Poly<QRat> h_q_poly(int n, const QRat& s) {
    std::vector<QRat> c(static_cast<std::size_t>(n) + 1, QRat());
    for (int k = 0; 2 * k <= n; ++k) {
        QRat v(q_factorial_ratio(n, n - 2 * k), q_factorial(k));
        v = v * s.pow(k) * QRat(QPoly::monomial(k * (k - 1) / 2, Rational(1)));
        c[static_cast<std::size_t>(n - 2 * k)] = v;
    }
    return Poly<QRat>(std::move(c));
}

/// v_n(x,m,s,q): (-s)^k q^(k^2) [n]!/([k]![n-2k]!) [m+n-k-1]!/[m+n-1]!
///               / ((-q;q)_k (-q^(n+m-k);q)_k).
inline Poly<QRat> v_q_poly(int n, int m, const QRat& s) {
    if (n < 0 || m < 0) throw std::invalid_argument("v_q_poly: negative argument");
    std::vector<QRat> c(static_cast<std::size_t>(n) + 1, QRat());
    for (int k = 0; 2 * k <= n; ++k) {
        QRat v(q_factorial_ratio(n, n - 2 * k), q_factorial(k));
        v = v / QRat(q_factorial_ratio(m + n - 1, m + n - 1 - k));
        v = v / QRat(q_pochhammer({-1, 1}, k) * q_pochhammer({-1, n + m - k}, k));
        v = v * (-s).pow(k) * QRat(QPoly::monomial(k * k, Rational(1)));
        c[static_cast<std::size_t>(n - 2 * k)] = v;
    }
    return Poly<QRat>(std::move(c));
}

/// H_n(x,s,q), the m -> infinity version of v_n: (-s)^k q^(k^2) [n]!/([k]![n-2k]!) / (-q;q)_k.
inline Poly<QRat> big_h_q_poly(int n, const QRat& s) {
    std::vector<QRat> c(static_cast<std::size_t>(n) + 1, QRat());
    for (int k = 0; 2 * k <= n; ++k) {
        QRat v(q_factorial_ratio(n, n - 2 * k), q_factorial(k) * q_pochhammer({-1, 1}, k));
        v = v * (-s).pow(k) * QRat(QPoly::monomial(k * k, Rational(1)));
        c[static_cast<std::size_t>(n - 2 * k)] = v;
    }
    return Poly<QRat>(std::move(c));
}

/// R(n,m,q): (-1)^k q^binom(k,2) [floor(n/2) choose k] / ([m+n-1]...[m+n-k]).
inline Poly<QRat> r_moment_poly(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("r_moment_poly: negative argument");
    std::vector<QRat> c(static_cast<std::size_t>(n) + 1, QRat());
    for (int k = 0; 2 * k <= n; ++k) {
        QRat v(q_binomial(n / 2, k), q_factorial_ratio(m + n - 1, m + n - 1 - k));
        v = v * QRat(QPoly::monomial(k * (k - 1) / 2, Rational(k % 2 ? -1 : 1)));
        c[static_cast<std::size_t>(n - 2 * k)] = v;
    }
    return Poly<QRat>(std::move(c));
}

/// r_n(x,q): (-1)^k q^binom(k,2) [floor(n/2) choose k]; r_{2n} = prod (x^2 - q^j).
inline Poly<QRat> r_limit_poly(int n) {
    std::vector<QRat> c(static_cast<std::size_t>(n) + 1, QRat());
    for (int k = 0; 2 * k <= n; ++k) {
        QRat v(q_binomial(n / 2, k));
        v = v * QRat(QPoly::monomial(k * (k - 1) / 2, Rational(k % 2 ? -1 : 1)));
        c[static_cast<std::size_t>(n - 2 * k)] = v;
    }
    return Poly<QRat>(std::move(c));
}

// --- recurrence construction --------------------------------------------------

/// p_0 = 1, p_1 = x, p_n = x p_{n-1} + rec(n) p_{n-2}.
template <ScalarField S>
std::vector<Poly<S>> three_term_ladder(int n_max, const std::function<S(int)>& rec) {
    std::vector<Poly<S>> p;
    p.reserve(static_cast<std::size_t>(n_max) + 1);
    p.push_back(Poly<S>(scalar_traits<S>::one()));
    if (n_max >= 1) p.push_back(Poly<S>::variable());
    for (int n = 2; n <= n_max; ++n)
        p.push_back(Poly<S>::variable() * p[static_cast<std::size_t>(n - 1)] +
                    rec(n) * p[static_cast<std::size_t>(n - 2)]);
    return p;
}

inline std::vector<Poly<Rational>> lucas_ladder(int n_max) {
    return three_term_ladder<Rational>(n_max, [](int n) {
        return n == 2 ? Rational(-2) : Rational(-1);
    });
}

inline std::vector<Poly<Rational>> fibonacci_ladder(int n_max) {
    return three_term_ladder<Rational>(n_max, [](int) { return Rational(-1); });
}

inline std::vector<Poly<Rational>> cheb_t_ladder(int n_max) {
    return three_term_ladder<Rational>(n_max, [](int n) {
        return n == 2 ? make_rational(-1, 2) : make_rational(-1, 4);
    });
}

inline std::vector<Poly<Rational>> cheb_u_ladder(int n_max) {
    return three_term_ladder<Rational>(n_max, [](int) { return make_rational(-1, 4); });
}

/// (1.3): l_n = x l_{n-1} + s lambda_{n-2}(m) l_{n-2}.
inline std::vector<Poly<Rational>> l_ladder(int n_max, int m, const Rational& s) {
    return three_term_ladder<Rational>(n_max, [m, s](int n) {
        return s * lambda_coeff(n - 2, m);
    });
}

inline std::vector<Poly<Rational>> v_ladder(int n_max, int m, const Rational& s) {
    return l_ladder(n_max, m, -s / 4);
}

/// (3.2): v_n = x v_{n-1} - s mu_{n-2}(m,q) v_{n-2}.
inline std::vector<Poly<QRat>> v_q_ladder(int n_max, int m, const QRat& s) {
    return three_term_ladder<QRat>(n_max, [m, s](int n) {
        return QRat() - s * mu_coeff_q(n - 2, m);
    });
}

/// Derived three-term recurrence of the H family: H_n = x H_{n-1} - s q^(n-1) [n-1] H_{n-2}.
inline std::vector<Poly<QRat>> big_h_q_ladder(int n_max, const QRat& s) {
    return three_term_ladder<QRat>(n_max, [s](int n) {
        return QRat() - s * QRat(QPoly::monomial(n - 1, Rational(1)) * q_int(n - 1));
    });
}

/// Operator recurrence (2.3):
/// l_n = (x - (1-q) s q^(-m) D_q) l_{n-1} + s q^(-m) lambda_{n-2}(m,q) l_{n-2}.
inline std::vector<Poly<QRat>> l_q_ladder(int n_max, int m, const QRat& s) {
    std::vector<Poly<QRat>> p;
    p.reserve(static_cast<std::size_t>(n_max) + 1);
    p.push_back(Poly<QRat>(QRat(1)));
    if (n_max >= 1) p.push_back(Poly<QRat>::variable());
    const QRat q_neg_m = QRat::q_power(-m);
    const QRat one_minus_q = QRat(QPoly(1) - QPoly::variable());
    for (int n = 2; n <= n_max; ++n) {
        const Poly<QRat>& prev = p[static_cast<std::size_t>(n - 1)];
        Poly<QRat> t = Poly<QRat>::variable() * prev - (one_minus_q * s * q_neg_m) * d_q(prev);
        t += (s * q_neg_m * lambda_coeff_q(n - 2, m)) * p[static_cast<std::size_t>(n - 2)];
        p.push_back(std::move(t));
    }
    return p;
}

/// Four-term recurrence (2.10) of the h family.
inline std::vector<Poly<QRat>> h_q_ladder(int n_max, const QRat& s) {
    std::vector<Poly<QRat>> p;
    p.reserve(static_cast<std::size_t>(n_max) + 1);
    p.push_back(Poly<QRat>(QRat(1)));
    if (n_max >= 1) p.push_back(Poly<QRat>::variable());
    const QRat one_minus_q = QRat(QPoly(1) - QPoly::variable());
    for (int n = 2; n <= n_max; ++n) {
        QRat c2 = QRat(QPoly::monomial(n - 2, Rational(1)) * q_int(2) * q_int(n - 1)) * s;
        Poly<QRat> t = Poly<QRat>::variable() * p[static_cast<std::size_t>(n - 1)] +
                       c2 * p[static_cast<std::size_t>(n - 2)];
        if (n >= 4) {
            QRat c4 = one_minus_q *
                      QRat(QPoly::monomial(n - 3, Rational(1)) * q_int(n - 1) * q_int(n - 2) *
                           q_int(n - 3)) *
                      s * s;
            t += c4 * p[static_cast<std::size_t>(n - 4)];
        }
        p.push_back(std::move(t));
    }
    return p;
}

// --- expansion coefficients ---------------------------------------------------

/// a(n,k,m) of (1.10); out-of-range k gives 0 by the sum convention.
inline Rational a_coeff(int n, int k, int m) {
    if (k < 0 || 2 * k > n) return Rational(0);
    Rational v = Rational(factorial_ratio(n, n - 2 * k)) / Rational(factorial(k));
    return v / Rational(factorial_ratio(n + m - k, n + m - 2 * k));
}

/// q-analogue from (2.6): [n]!/([k]![n-2k]!) [n+m-2k]!/[n+m-k]!.
inline QRat a_coeff_q(int n, int k, int m) {
    if (k < 0 || 2 * k > n) return QRat();
    QRat v(q_factorial_ratio(n, n - 2 * k), q_factorial(k));
    return v / QRat(q_factorial_ratio(n + m - k, n + m - 2 * k));
}

/// Expansion factor from (3.3) (without the s^k power):
/// a_q(n,k,m) * q^k / ((-q;q)_k (-q^(n+m+1-2k);q)_k).
inline QRat v_expand_coeff_q(int n, int k, int m) {
    if (k < 0 || 2 * k > n) return QRat();
    QRat v = a_coeff_q(n, k, m) * QRat(QPoly::monomial(k, Rational(1)));
    return v / QRat(q_pochhammer({-1, 1}, k) * q_pochhammer({-1, n + m + 1 - 2 * k}, k));
}

/// Coefficients c_k with x^n = sum_k c_k l_{n-2k}(x,m,s); c_k = a(n,k,m)(-s)^k.
inline std::vector<Rational> monomial_expansion(int n, int m, const Rational& s) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n / 2) + 1);
    for (int k = 0; 2 * k <= n; ++k) out.push_back(a_coeff(n, k, m) * pow_rational(-s, k));
    return out;
}

/// Triangular expansion of p in a monic basis (basis[d] has degree d).
template <ScalarField S>
std::vector<S> expand_in_basis(Poly<S> p, const std::vector<Poly<S>>& basis) {
    std::vector<S> coeffs(basis.size(), scalar_traits<S>::zero());
    while (!p.is_zero()) {
        int d = p.degree();
        if (d >= static_cast<int>(basis.size()))
            throw std::invalid_argument("expand_in_basis: basis too short");
        S c = p.coeff(d);
        coeffs[static_cast<std::size_t>(d)] = c;
        p -= c * basis[static_cast<std::size_t>(d)];
    }
    return coeffs;
}

// --- moment functionals ---------------------------------------------------------

template <ScalarField S>
struct MomentFunctional {
    std::string name;
    std::function<S(int)> even_moment;  // n -> moment of x^(2n)

    /// Moment of x^power; odd powers vanish for every functional in scope.
    S moment(int power) const {
        if (power < 0) throw std::invalid_argument("moment: negative power");
        if (power % 2 != 0) return scalar_traits<S>::zero();
        return even_moment(power / 2);
    }

    S apply(const Poly<S>& p) const {
        S acc = scalar_traits<S>::zero();
        for (int i = 0; i < static_cast<int>(p.coefficients().size()); ++i)
            acc = acc + p.coeff(i) * moment(i);
        return acc;
    }
};

inline MomentFunctional<Rational> lambda_functional() {
    return {"lambda", [](int n) { return Rational(binomial(2 * n, n)); }};
}

inline MomentFunctional<Rational> lambda_star_functional() {
    return {"lambda_star", [](int n) { return catalan_number(n); }};
}

inline MomentFunctional<Rational> cheb_t_functional() {
    return {"cheb_t", [](int n) {
                return Rational(binomial(2 * n, n)) / Rational(pow_int(Int(4), n));
            }};
}

inline MomentFunctional<Rational> cheb_u_functional() {
    return {"cheb_u", [](int n) { return catalan_number(n) / Rational(pow_int(Int(4), n)); }};
}

/// Lambda_m with parameter s: moments (-s)^n sigma(m,n).
inline MomentFunctional<Rational> lambda_m_functional(int m, const Rational& s) {
    return {"lambda_m", [m, s](int n) { return pow_rational(-s, n) * sigma(m, n); }};
}

/// Lambda_{m,q} for the l(x,m,s,q) family: moments (-s)^n sigma_q(m,n);
/// the paper's s = -q^m instance gives q^(mn) sigma_q(m,n).
inline MomentFunctional<QRat> lambda_mq_functional(int m, const QRat& s) {
    return {"lambda_mq", [m, s](int n) { return (QRat() - s).pow(n) * sigma_q(m, n); }};
}

/// Phi_{m,q}: moments s^n q^n sigma_q(m,n) / ((-q;q)_n (-q^(m+1);q)_n).
inline MomentFunctional<QRat> phi_mq_functional(int m, const QRat& s) {
    return {"phi_mq", [m, s](int n) {
                QRat v = s.pow(n) * QRat(QPoly::monomial(n, Rational(1))) * sigma_q(m, n);
                return v / QRat(q_pochhammer({-1, 1}, n) * q_pochhammer({-1, m + 1}, n));
            }};
}

/// Moments of h_n(x,s,q): (-s)^n [2n]!/[n]!.
inline MomentFunctional<QRat> h_q_functional(const QRat& s) {
    return {"h_q", [s](int n) { return (QRat() - s).pow(n) * QRat(q_factorial_ratio(2 * n, n)); }};
}

/// Moments of H_n(x,s,q): (qs)^n [2n-1]!!.
inline MomentFunctional<QRat> big_h_q_functional(const QRat& s) {
    return {"big_h_q", [s](int n) {
                return (s * QRat::q_power(1)).pow(n) * QRat(q_odd_double_factorial(n));
            }};
}

/// Moments of R(n,m,q): [m]!/[m+n]!.
inline MomentFunctional<QRat> r_moment_functional(int m) {
    return {"r_moment", [m](int n) { return QRat(QPoly(1), q_factorial_ratio(m + n, m)); }};
}

inline MomentFunctional<QRat> r_limit_functional() {
    return {"r_limit", [](int) { return QRat(1); }};
}

// --- special values ---------------------------------------------------------------

/// (1.8): l_n(1,m,-1/4) = (2m+1)(2m+2)...(2m+n-1) / ((2m+2)(2m+4)...(2m+2n-2)).
inline Rational cheb_like_at_one(int n, int m) {
    Int num = 1, den = 1;
    for (int i = 1; i <= n - 1; ++i) {
        num *= (2 * m + i);
        den *= (2 * m + 2 * i);
    }
    return make_rational(num, den);
}

/// (4.18): v_n(1,m,1/q,q) = q^binom(n,2) [2m+n-1]...[2m+1] / ([2m+2n-2]...[2m+2]).
inline QRat vq_special_at_one(int n, int m) {
    QPoly num(1), den(1);
    for (int i = 1; i <= n - 1; ++i) {
        num *= q_int(2 * m + i);
        den *= q_int(2 * m + 2 * i);
    }
    return QRat(QPoly::monomial(n * (n - 1) / 2, Rational(1)) * num, den);
}

/// Pentagonal numbers r(n) = n(3n-1)/2.
inline int pentagonal(int n) { return n * (3 * n - 1) / 2; }

/// (2.12): closed form of l_n(1,1,-1,q).
inline QPoly pentagonal_special(int n) {
    int t = n / 3, r = n % 3;
    if (r == 2) return QPoly();
    int expo = r == 0 ? t * (3 * t - 1) / 2 : t * (3 * t + 1) / 2;
    return QPoly::monomial(expo, Rational(t % 2 ? -1 : 1));
}

/// (2.14): closed form of l_n(1,2,-1,q)[n+1].
inline QPoly l2q_scaled_special(int n) {
    int t = n / 3, r = n % 3;
    Rational sign(t % 2 ? -1 : 1);
    if (r == 0) return QPoly::monomial(t * (3 * t - 1) / 2, sign) * q_int(t + 1);
    if (r == 1) {
        QPoly factor = QPoly(1) + QPoly::monomial(t + 1, Rational(1));
        return QPoly::monomial(t * (3 * t + 1) / 2, sign) * q_int(t + 1) * factor;
    }
    return QPoly::monomial((3 * t * t + 5 * t + 4) / 2, sign) * q_int(t + 1);
}

/// (1.7): closed form of l_n(1,2,-1)(n+1).
inline Rational l12_scaled_special(int n) {
    int t = n / 3, r = n % 3;
    Rational v(t + 1);
    if (r == 1) v *= 2;
    return t % 2 ? -v : v;
}

/// (1.5) expected period-6 values with the l_0 -> 2 replacement.
inline Rational period6_m0(int n) {
    static const int vals[6] = {2, 1, -1, -2, -1, 1};
    return Rational(vals[n % 6]);
}

/// (1.6) expected period-6 values.
inline Rational period6_m1(int n) {
    static const int vals[6] = {1, 1, 0, -1, -1, 0};
    return Rational(vals[n % 6]);
}

// --- generating function (1.28) ------------------------------------------------

struct GenfunCheck {
    bool matches_power_form = false;   // lhs == 1/(1-xz-sz^2)^m
    bool matches_m1_power = false;     // lhs == (sum l_n(x,1,s) z^n)^m
    bool pass() const { return matches_power_form && matches_m1_power; }
};

/// Both sides of (1.28) as truncated series at rational samples of x and s.
inline GenfunCheck genfun_convolution_check(int m, const Rational& x0, const Rational& s0,
                                            int order) {
    if (m < 1) throw std::invalid_argument("genfun_convolution_check: m >= 1 required");
    Series<Rational> lhs(order, SeriesNorm::Ordinary);
    Series<Rational> m1(order, SeriesNorm::Ordinary);
    for (int n = 0; n <= order; ++n) {
        lhs.set_coeff(n, l_poly(n, m, s0).evaluate(x0) * Rational(binomial(n + m - 1, m - 1)));
        m1.set_coeff(n, l_poly(n, 1, s0).evaluate(x0));
    }
    Series<Rational> denom(order, SeriesNorm::Ordinary);
    denom.set_coeff(0, Rational(1));
    if (order >= 1) denom.set_coeff(1, -x0);
    if (order >= 2) denom.set_coeff(2, -s0);
    Series<Rational> rhs = Series<Rational>::one(order, SeriesNorm::Ordinary) / denom.pow(m);
    GenfunCheck out;
    out.matches_power_form = (lhs == rhs);
    out.matches_m1_power = (lhs == m1.pow(m));
    return out;
}

}  // namespace supercat
