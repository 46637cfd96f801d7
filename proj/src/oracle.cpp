#include "qtk/oracle.hpp"

#include "memo.hpp"
#include "qtk/error.hpp"
#include "qtk/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtk {

QTRational NumericSchur::coeff(const Partition& lambda) const
{
    auto it = terms.find(lambda);
    return it == terms.end() ? QTRational(0) : it->second;
}

void NumericSchur::add(const Partition& lambda, const QTRational& c)
{
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(lambda, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

NumericSchur& NumericSchur::operator+=(const NumericSchur& o)
{
    for (const auto& [lambda, c] : o.terms) add(lambda, c);
    return *this;
}

NumericSchur operator*(const QTRational& c, const NumericSchur& f)
{
    NumericSchur out;
    if (c == 0) return out;
    for (const auto& [lambda, v] : f.terms) out.terms.emplace(lambda, c * v);
    return out;
}

NumericSchur evaluate(const SchurExpansion& f, const QTPoint& p)
{
    NumericSchur out;
    for (const auto& [lambda, c] : f.terms()) out.add(lambda, c.eval(p.q, p.t));
    return out;
}

namespace {

// First-column hook lengths with `len` beads.
std::vector<int> beta_numbers(const Partition& lambda, int len)
{
    std::vector<int> beta;
    for (int i = 1; i <= len; ++i) beta.push_back(lambda.row(i) + len - i);
    return beta;
}

Partition from_beta(std::vector<int> beta)
{
    std::sort(beta.rbegin(), beta.rend());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 1; i <= len; ++i) {
        const int part = beta[static_cast<std::size_t>(i - 1)] - (len - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

detail::Memo<std::pair<Partition, Partition>, long>& character_cache()
{
    static detail::Memo<std::pair<Partition, Partition>, long> memo;
    return memo;
}

} // namespace

long mn_character(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size()) throw DomainError("mn_character: sizes differ");
    if (rho.empty()) return 1;
    return character_cache().get({lambda, rho}, [&] {
        const int k = rho.row(1);
        const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
        const int len = lambda.length();
        const auto beta = beta_numbers(lambda, len);
        long total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            const int target = beta[i] - k;
            if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            // The hook's height is the number of beads jumped over.
            int between = 0;
            for (int b : beta)
                if (b > target && b < beta[i]) ++between;
            auto moved = beta;
            moved[i] = target;
            const long chi = mn_character(from_beta(std::move(moved)), rest);
            total += (between % 2 ? -chi : chi);
        }
        return total;
    });
}

mpz_class z_rho(const Partition& rho)
{
    mpz_class z = 1;
    std::map<int, int> mult;
    for (int part : rho.parts()) ++mult[part];
    for (const auto& [part, m] : mult)
        for (int j = 1; j <= m; ++j) z *= part * j;
    return z;
}

PowerExpansion schur_to_power(const Partition& lambda)
{
    PowerExpansion out;
    for (const auto& rho : partitions_of(lambda.size())) {
        const long chi = mn_character(lambda, rho);
        if (chi == 0) continue;
        QTRational c(mpz_class(chi), z_rho(rho));
        c.canonicalize();
        out.terms.emplace(rho, c);
    }
    return out;
}

PowerExpansion to_power(const NumericSchur& f)
{
    PowerExpansion out;
    for (const auto& [lambda, c] : f.terms)
        for (const auto& [rho, v] : schur_to_power(lambda).terms) {
            auto& slot = out.terms[rho];
            slot += c * v;
        }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    return out;
}

namespace {

QTRational power_of(const QTRational& x, int k)
{
    QTRational r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

QTRational weighted_pairing(const PowerExpansion& f, const PowerExpansion& g, const QTPoint& p, bool with_q)
{
    QTRational sum = 0;
    for (const auto& [rho, fc] : f.terms) {
        auto it = g.terms.find(rho);
        if (it == g.terms.end()) continue;
        QTRational w = QTRational(z_rho(rho));
        for (int part : rho.parts()) {
            const QTRational den = 1 - power_of(p.t, part);
            if (den == 0) throw DegeneratePoint("scalar product: 1 - t^" + std::to_string(part) + " vanishes");
            w *= (with_q ? QTRational(1 - power_of(p.q, part)) : QTRational(1)) / den;
        }
        sum += fc * it->second * w;
    }
    sum.canonicalize();
    return sum;
}

void require_extension(const std::vector<Partition>& order, int n)
{
    auto all = partitions_of(n);
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::sort(all.begin(), all.end());
    if (sorted != all) throw DomainError("Gram-Schmidt order must list every partition of n once");
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (dominance_leq(order[j], order[i]))
                throw DomainError("Gram-Schmidt order does not extend dominance");
}

} // namespace

QTRational scalar_qt(const PowerExpansion& f, const PowerExpansion& g, const QTPoint& p)
{
    return weighted_pairing(f, g, p, true);
}

QTRational scalar_t(const PowerExpansion& f, const PowerExpansion& g, const QTRational& t0)
{
    return weighted_pairing(f, g, {0, t0}, false);
}

NumericSchur macdonald_oracle_J(const Partition& mu, const QTPoint& p, const std::vector<Partition>& order)
{
    const int n = mu.size();
    require_extension(order, n);
    std::vector<NumericSchur> basis;
    std::vector<PowerExpansion> basis_p;
    std::vector<QTRational> norms;
    for (const auto& lambda : order) {
        NumericSchur v;
        v.add(lambda, 1);
        const PowerExpansion s_p = schur_to_power(lambda);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const QTRational c = scalar_qt(s_p, basis_p[j], p) / norms[j];
            v += QTRational(-c) * basis[j];
        }
        if (lambda == mu) {
            QTRational lead = 1;
            for (const auto& cell : skew_cells(mu, Partition{})) {
                const auto [arm, leg] = arm_leg(mu, cell);
                lead *= 1 - power_of(p.q, arm) * power_of(p.t, leg + 1);
            }
            if (lead == 0) throw DegeneratePoint("oracle: leading factor of J vanishes");
            return lead * v;
        }
        auto v_p = to_power(v);
        const QTRational norm = scalar_qt(v_p, v_p, p);
        if (norm == 0) throw DegeneratePoint("oracle: zero norm in Gram-Schmidt");
        basis.push_back(std::move(v));
        basis_p.push_back(std::move(v_p));
        norms.push_back(norm);
    }
    throw std::logic_error("oracle: mu missing from the order");
}

NumericSchur macdonald_oracle_J(const Partition& mu, const QTPoint& p)
{
    return macdonald_oracle_J(mu, p, linear_extension(mu.size()));
}

NumericSchur macdonald_oracle(const Partition& mu, const QTPoint& p)
{
    const PowerExpansion J = to_power(macdonald_oracle_J(mu, p));
    NumericSchur out;
    for (const auto& lambda : partitions_of(mu.size())) out.add(lambda, scalar_t(J, schur_to_power(lambda), p.t));
    return out;
}

QTRational kostka_oracle(const Partition& lambda, const Partition& mu, const QTPoint& p)
{
    if (lambda.size() != mu.size()) throw DomainError("kostka_oracle: sizes differ");
    return macdonald_oracle(mu, p).coeff(lambda);
}

QTPoly kostka_foulkes(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size()) throw DomainError("kostka_foulkes: |lambda| must equal |mu|");
    QTPoly out;
    for (const auto& T : enumerate_cst(lambda, mu)) out.add_term(0, charge(T), 1);
    return out;
}

mpz_class count_syt_hook(const Partition& lambda)
{
    mpz_class num = 1, den = 1;
    for (int i = 2; i <= lambda.size(); ++i) num *= i;
    for (const auto& cell : skew_cells(lambda, Partition{})) {
        const auto [arm, leg] = arm_leg(lambda, cell);
        den *= arm + leg + 1;
    }
    return num / den;
}

mpz_class count_syt_enumerated(const Partition& lambda)
{
    return static_cast<unsigned long>(enumerate_syt(lambda).size());
}

mpz_class count_syt(const Partition& lambda)
{
    const mpz_class h = count_syt_hook(lambda), e = count_syt_enumerated(lambda);
    if (h != e) throw std::logic_error("count_syt: hook length count disagrees with enumeration");
    return h;
}

namespace {

// Negative t exponents matter too: the expansions divide by factors like 1 - q/t.
bool degenerate(const QTPoint& p, int max_exp)
{
    for (int i = 0; i <= max_exp; ++i)
        for (int j = -max_exp; j <= max_exp; ++j) {
            if (!i && !j) continue;
            const QTRational tj = j >= 0 ? power_of(p.t, j) : QTRational(1 / power_of(p.t, -j));
            if (power_of(p.q, i) * tj == 1) return true;
        }
    return false;
}

QTRational draw_fraction(std::mt19937_64& rng)
{
    const auto v = static_cast<long>(3 + rng() % 95);                       // 3..97
    const auto u = static_cast<long>(2 + rng() % static_cast<unsigned long>(v - 2)); // 2..v-1
    QTRational r(u, v);
    r.canonicalize();
    return r;
}

} // namespace

QTPoint draw_point(std::mt19937_64& rng, int max_exp)
{
    for (;;) {
        QTPoint p{draw_fraction(rng), draw_fraction(rng)};
        if (!degenerate(p, max_exp)) return p;
    }
}

std::vector<QTPoint> draw_points(std::uint64_t seed, int count, int max_exp)
{
    std::mt19937_64 rng(seed);
    std::vector<QTPoint> out;
    for (int i = 0; i < count; ++i) out.push_back(draw_point(rng, max_exp));
    return out;
}

} // namespace qtk
