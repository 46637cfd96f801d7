#include "qtk/qtpoly.hpp"

#include "qtk/error.hpp"

#include <sstream>
#include <vector>

namespace qtk {

QTPoly::QTPoly(long c)
{
    if (c != 0) terms_.emplace(Key{0, 0}, mpz_class(c));
}

QTPoly::QTPoly(const mpz_class& c)
{
    if (c != 0) terms_.emplace(Key{0, 0}, c);
}

QTPoly QTPoly::monomial(int dq, int dt, const mpz_class& c)
{
    if (dq < 0 || dt < 0) throw DomainError("negative exponent in monomial");
    QTPoly p;
    if (c != 0) p.terms_.emplace(Key{dq, dt}, c);
    return p;
}

mpz_class QTPoly::coeff(int dq, int dt) const
{
    auto it = terms_.find({dq, dt});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int QTPoly::max_deg_q() const noexcept
{
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int QTPoly::max_deg_t() const noexcept
{
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

void QTPoly::add_term(int dq, int dt, const mpz_class& c)
{
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(Key{dq, dt}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTPoly& QTPoly::operator+=(const QTPoly& o)
{
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o)
{
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b)
{
    QTPoly out;
    mpz_class prod;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            prod = ca * cb;
            out.add_term(ka.first + kb.first, ka.second + kb.second, prod);
        }
    return out;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

QTPoly operator-(QTPoly a)
{
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
}

QTPoly QTPoly::scale(const mpz_class& c) const
{
    if (c == 0) return {};
    QTPoly out = *this;
    for (auto& [k, v] : out.terms_) v *= c;
    return out;
}

QTPoly QTPoly::pow(int e) const
{
    if (e < 0) throw DomainError("negative power");
    QTPoly out(1), base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

QTPoly QTPoly::shift(int dq, int dt) const
{
    QTPoly out;
    for (const auto& [k, c] : terms_) {
        if (k.first + dq < 0 || k.second + dt < 0) throw DomainError("shift leaves polynomial ring");
        out.terms_.emplace_hint(out.terms_.end(), Key{k.first + dq, k.second + dt}, c);
    }
    return out;
}

QTRational QTPoly::eval(const QTRational& q0, const QTRational& t0) const
{
    if (terms_.empty()) return 0;
    std::vector<QTRational> qp{1}, tp{1};
    const int dq = max_deg_q(), dt = max_deg_t();
    for (int i = 1; i <= dq; ++i) qp.push_back(qp.back() * q0);
    for (int i = 1; i <= dt; ++i) tp.push_back(tp.back() * t0);
    QTRational sum = 0;
    for (const auto& [k, c] : terms_)
        sum += QTRational(c) * qp[static_cast<std::size_t>(k.first)] * tp[static_cast<std::size_t>(k.second)];
    sum.canonicalize();
    return sum;
}

namespace {

std::string render(const QTPoly::Terms& terms, bool latex)
{
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        const auto [dq, dt] = k;
        mpz_class mag = abs(c);
        if (c < 0) out << "-";
        else if (!first) out << "+";
        first = false;
        const bool constant = dq == 0 && dt == 0;
        bool wrote = false;
        if (mag != 1 || constant) {
            out << mag.get_str();
            wrote = true;
        }
        auto var = [&](char v, int d) {
            if (d == 0) return;
            if (!latex && wrote) out << "*";
            out << v;
            if (d > 1) {
                if (latex) out << "^{" << d << "}";
                else out << "^" << d;
            }
            wrote = true;
        };
        var('q', dq);
        var('t', dt);
    }
    return out.str();
}

} // namespace

std::string QTPoly::to_string() const { return render(terms_, false); }
std::string QTPoly::to_latex() const { return render(terms_, true); }

QTPoly reverse(const QTPoly& p, int A, int B)
{
    if (p.max_deg_q() > A || p.max_deg_t() > B)
        throw DomainError("reverse: degree bound violated");
    QTPoly out;
    for (const auto& [k, c] : p.terms()) out.add_term(A - k.first, B - k.second, c);
    return out;
}

QTPoly swap_qt(const QTPoly& p)
{
    QTPoly out;
    for (const auto& [k, c] : p.terms()) out.add_term(k.second, k.first, c);
    return out;
}

bool is_nonnegative(const QTPoly& p)
{
    for (const auto& [k, c] : p.terms())
        if (c < 0) return false;
    return true;
}

QTPoly tilt_t_by_q(const QTPoly& p, int s)
{
    QTPoly out;
    for (const auto& [k, c] : p.terms()) {
        const int dt = k.second + s * k.first;
        if (dt < 0) throw DomainError("tilt leaves polynomial ring");
        out.add_term(k.first, dt, c);
    }
    return out;
}

QTPoly at_q_zero(const QTPoly& p)
{
    QTPoly out;
    for (const auto& [k, c] : p.terms())
        if (k.first == 0) out.add_term(0, k.second, c);
    return out;
}

QTPoly qt_pochhammer(const QTPoly& x, int k)
{
    QTPoly out(1), xi = x;
    for (int i = 0; i < k; ++i) {
        out *= QTPoly(1) - xi;
        xi = xi.shift(0, 1);
    }
    return out;
}

QTPoly gaussian_binomial_t(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return {};
    // row[j] = [i choose j]_t; [i choose j] = [i-1 choose j-1] + t^j [i-1 choose j].
    std::vector<QTPoly> row{QTPoly(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<QTPoly> next(static_cast<std::size_t>(i) + 1);
        for (int j = 0; j <= i; ++j) {
            QTPoly v;
            if (j >= 1) v += row[static_cast<std::size_t>(j - 1)];
            if (j <= i - 1) v += row[static_cast<std::size_t>(j)].shift(0, j);
            next[static_cast<std::size_t>(j)] = std::move(v);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

} // namespace qtk
