#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace qtk {

/// Exact rational used for specialized evaluation.
using QTRational = mpq_class;

/// Sparse polynomial in q and t with arbitrary-precision integer coefficients.
/// Keys are (deg_q, deg_t); zero coefficients are never stored.
class QTPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, mpz_class>;

    QTPoly() = default;
    QTPoly(long c); // NOLINT(google-explicit-constructor): integers are constants
    explicit QTPoly(const mpz_class& c);

    static QTPoly monomial(int dq, int dt, const mpz_class& c = 1);
    static QTPoly q(int d = 1) { return monomial(d, 0); }
    static QTPoly t(int d = 1) { return monomial(0, d); }

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] mpz_class coeff(int dq, int dt) const;
    [[nodiscard]] int max_deg_q() const noexcept; // -1 for zero
    [[nodiscard]] int max_deg_t() const noexcept;

    void add_term(int dq, int dt, const mpz_class& c);

    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator-(QTPoly a);
    friend bool operator==(const QTPoly&, const QTPoly&) = default;

    [[nodiscard]] QTPoly scale(const mpz_class& c) const;
    [[nodiscard]] QTPoly pow(int e) const;
    /// Multiply by q^dq t^dt.
    [[nodiscard]] QTPoly shift(int dq, int dt) const;

    [[nodiscard]] QTRational eval(const QTRational& q0, const QTRational& t0) const;

    /// "1+q*t", "-t^2+2*q^3*t"; zero is "0".
    [[nodiscard]] std::string to_string() const;
    /// "1+qt", "q^{2}t".
    [[nodiscard]] std::string to_latex() const;

private:
    Terms terms_;
};

/// q^A t^B P(1/q, 1/t). Throws DomainError if A or B is below the degree in that variable.
[[nodiscard]] QTPoly reverse(const QTPoly& p, int A, int B);
[[nodiscard]] QTPoly swap_qt(const QTPoly& p);
/// True when every stored coefficient is positive (so the zero polynomial qualifies).
[[nodiscard]] bool is_nonnegative(const QTPoly& p);
/// Replace q^j t^k by q^j t^{k + s*j}; throws if an exponent would go negative.
[[nodiscard]] QTPoly tilt_t_by_q(const QTPoly& p, int s);
/// Set q = 0.
[[nodiscard]] QTPoly at_q_zero(const QTPoly& p);

/// (x; t)_k = (1-x)(1-xt)...(1-xt^{k-1}) for a monomial-like x given as a polynomial.
[[nodiscard]] QTPoly qt_pochhammer(const QTPoly& x, int k);
/// Gaussian binomial [n choose k]_t by the t-Pascal recurrence; zero outside 0 <= k <= n.
[[nodiscard]] QTPoly gaussian_binomial_t(int n, int k);

} // namespace qtk
