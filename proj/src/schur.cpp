#include "qtk/schur.hpp"

#include "memo.hpp"
#include "qtk/error.hpp"

#include <tuple>

namespace qtk {

namespace {

using StripKey = std::tuple<std::vector<int>, int, bool>;

std::vector<Partition> extensions(const Partition& lambda, int k, Strip kind)
{
    static detail::Memo<StripKey, std::vector<Partition>> memo;
    return memo.get({lambda.parts(), k, kind == Strip::horizontal}, [&] { return strip_extensions(lambda, k, kind); });
}

std::vector<Partition> removals(const Partition& mu, int k, Strip kind)
{
    static detail::Memo<StripKey, std::vector<Partition>> memo;
    return memo.get({mu.parts(), k, kind == Strip::horizontal}, [&] { return strip_removals(mu, k, kind); });
}

SchurExpansion pieri(int k, const SchurExpansion& f, Strip kind, bool skew)
{
    SchurExpansion out;
    if (k < 0) throw DomainError("Pieri degree must be nonnegative");
    for (const auto& [lambda, c] : f.terms()) {
        for (const auto& rho : skew ? removals(lambda, k, kind) : extensions(lambda, k, kind)) out.add(rho, c);
    }
    return out;
}

using BasisKey = std::pair<int, std::vector<int>>;

SchurExpansion S_on_basis(int m, const Partition& lambda)
{
    static detail::Memo<BasisKey, SchurExpansion> memo;
    return memo.get({m, lambda.parts()}, [&] {
        SchurExpansion out;
        for (int k = 0; k <= lambda.size(); ++k) {
            const QTPoly sign = (k % 2) ? QTPoly(-1) : QTPoly(1);
            for (const auto& nu : removals(lambda, k, Strip::vertical))
                for (const auto& rho : extensions(nu, m + k, Strip::horizontal)) out.add(rho, sign);
        }
        return out;
    });
}

SchurExpansion H_on_basis(int m, const Partition& lambda)
{
    static detail::Memo<BasisKey, SchurExpansion> memo;
    return memo.get({m, lambda.parts()}, [&] {
        SchurExpansion out;
        for (int k = 0; k <= lambda.size(); ++k)
            for (const auto& nu : removals(lambda, k, Strip::horizontal))
                out += S_on_basis(m + k, nu).scaled(QTPoly::t(k));
        return out;
    });
}

SchurExpansion Hbar_on_basis(int m, const Partition& lambda)
{
    static detail::Memo<BasisKey, SchurExpansion> memo;
    return memo.get({m, lambda.parts()}, [&] {
        SchurExpansion out;
        const int n = lambda.size();
        for (int j = 0; j <= n; ++j)
            for (const auto& nu : removals(lambda, j, Strip::vertical))
                for (int i = 0; i <= n - j; ++i) {
                    const QTPoly c = QTPoly::t(n - j).scale(i % 2 ? -1 : 1);
                    for (const auto& kappa : removals(nu, i, Strip::horizontal))
                        for (const auto& rho : extensions(kappa, m + i + j, Strip::vertical)) out.add(rho, c);
                }
        return out;
    });
}

} // namespace

SchurExpansion one() { return SchurExpansion::basis(Partition{}); }
SchurExpansion schur(const Partition& lambda) { return SchurExpansion::basis(lambda); }

int require_homogeneous(const SchurExpansion& f, const char* who)
{
    if (f.is_zero()) return 0;
    auto d = f.degree();
    if (!d) throw DomainError(std::string(who) + ": input is not homogeneous");
    return *d;
}

SchurExpansion apply_linear(const SchurExpansion& f, const std::function<SchurExpansion(const Partition&)>& on_basis)
{
    SchurExpansion out;
    for (const auto& [lambda, c] : f.terms()) {
        const auto image = on_basis(lambda);
        if (c == QTPoly(1)) out += image;
        else
            for (const auto& [rho, v] : image.terms()) out.add(rho, v * c);
    }
    return out;
}

SchurExpansion mul_h(int k, const SchurExpansion& f) { return pieri(k, f, Strip::horizontal, false); }
SchurExpansion mul_e(int k, const SchurExpansion& f) { return pieri(k, f, Strip::vertical, false); }
SchurExpansion skew_h(int k, const SchurExpansion& f) { return pieri(k, f, Strip::horizontal, true); }
SchurExpansion skew_e(int k, const SchurExpansion& f) { return pieri(k, f, Strip::vertical, true); }

SchurExpansion bernstein_S(int m, const SchurExpansion& f)
{
    if (m < 0) throw DomainError("bernstein_S: m must be nonnegative");
    require_homogeneous(f, "bernstein_S");
    return apply_linear(f, [m](const Partition& l) { return S_on_basis(m, l); });
}

SchurExpansion hl_vertex_H(int m, const SchurExpansion& f)
{
    if (m < 0) throw DomainError("hl_vertex_H: m must be nonnegative");
    require_homogeneous(f, "hl_vertex_H");
    return apply_linear(f, [m](const Partition& l) { return H_on_basis(m, l); });
}

SchurExpansion hl_vertex_H_snake(int m, int k, const SchurExpansion& f)
{
    if (m < 0) throw DomainError("hl_vertex_H_snake: m must be nonnegative");
    require_homogeneous(f, "hl_vertex_H_snake");
    return apply_linear(f, [m, k](const Partition& lambda) {
        const int kk = k < 0 ? std::max(0, lambda.row(1) - m) : k;
        if (m + kk < lambda.row(1))
            throw DomainError("hl_vertex_H_snake: m + k below the first part of " + lambda.pretty());
        SchurExpansion out;
        for (const auto& mu : extensions(lambda, m + kk, Strip::horizontal)) {
            auto core = drop_snake(mu, kk);
            if (!core) continue;
            const int sign = (kk == 0 || snake_height(mu, kk) % 2 == 1) ? 1 : -1;
            const int texp = lambda.size() - remove_first_row(mu).size();
            out.add(*core, QTPoly::t(texp).scale(sign));
        }
        return out;
    });
}

SchurExpansion hl_vertex_Hbar(int m, const SchurExpansion& f)
{
    if (m < 0) throw DomainError("hl_vertex_Hbar: m must be nonnegative");
    require_homogeneous(f, "hl_vertex_Hbar");
    return apply_linear(f, [m](const Partition& l) { return Hbar_on_basis(m, l); });
}

SchurExpansion omega(const SchurExpansion& f)
{
    SchurExpansion out;
    for (const auto& [lambda, c] : f.terms()) out.add(conjugate(lambda), c);
    return out;
}

SchurExpansion grade_Rt(const SchurExpansion& f)
{
    const int n = require_homogeneous(f, "grade_Rt");
    return f.scaled(QTPoly::t(n));
}

SchurExpansion swap_qt(const SchurExpansion& f)
{
    return f.map_coeffs([](const QTPoly& c) { return swap_qt(c); });
}

QTPoly hall_pairing(const SchurExpansion& f, const SchurExpansion& g)
{
    QTPoly out;
    for (const auto& [lambda, c] : f.terms()) out += c * g.coeff(lambda);
    return out;
}

} // namespace qtk
