#include "qtk/macdonald.hpp"

#include "memo.hpp"
#include "qtk/error.hpp"

#include <atomic>

namespace qtk {

namespace {

const QTPoly q1 = QTPoly::q();

SchurExpansion e1(const SchurExpansion& f) { return mul_e(1, f); }

} // namespace

int SupportedShape::head() const noexcept
{
    switch (family) {
    case ShapeFamily::two_column: return 2;
    case ShapeFamily::three_plus: return 3;
    case ShapeFamily::four_plus: return 4;
    }
    return 2;
}

Partition SupportedShape::base() const
{
    std::vector<int> parts;
    if (family != ShapeFamily::two_column) parts.push_back(head());
    parts.insert(parts.end(), static_cast<std::size_t>(a), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
    return Partition(std::move(parts));
}

Partition SupportedShape::partition() const { return conjugated ? conjugate(base()) : base(); }

namespace {

std::optional<SupportedShape> classify_direct(const Partition& mu)
{
    SupportedShape s;
    int start = 0;
    if (mu.row(1) == 3 || mu.row(1) == 4) {
        s.family = mu.row(1) == 3 ? ShapeFamily::three_plus : ShapeFamily::four_plus;
        start = 1;
    } else if (mu.row(1) > 4) {
        return std::nullopt;
    }
    for (int i = start; i < mu.length(); ++i) {
        const int p = mu.parts()[static_cast<std::size_t>(i)];
        if (p == 2) ++s.a;
        else if (p == 1) ++s.b;
        else return std::nullopt;
    }
    return s;
}

} // namespace

std::optional<SupportedShape> classify_shape(const Partition& mu)
{
    if (auto s = classify_direct(mu)) return s;
    if (auto s = classify_direct(conjugate(mu))) {
        s->conjugated = true;
        return s;
    }
    return std::nullopt;
}

SupportedShape require_supported(const Partition& mu)
{
    if (auto s = classify_shape(mu)) return *s;
    std::string msg = "unsupported shape " + mu.pretty() +
                      ": no vertex-operator route (need (m,2^a,1^b) with m <= 4, or its conjugate)";
    if (mu == Partition{3, 3, 2}) msg += "; (3,3,2) is the one partition of 8 outside this range";
    throw UnsupportedShape(msg);
}

SchurExpansion hall_littlewood(const Partition& mu)
{
    static detail::Memo<std::vector<int>, SchurExpansion> memo;
    return memo.get(mu.parts(), [&] {
        SchurExpansion out;
        for (const auto& T : enumerate_cst(mu)) out.add(T.shape(), QTPoly::t(charge(T)));
        return out;
    });
}

SchurExpansion hl_to_schur(const HLExpansion& f)
{
    SchurExpansion out;
    for (const auto& [nu, c] : f.terms()) out += hall_littlewood(nu).scaled(c);
    return out;
}

SchurExpansion H2qt(const SchurExpansion& f) { return hl_vertex_H(2, f) + hl_vertex_Hbar(2, f).scaled(q1); }

SchurExpansion H3qt(const SchurExpansion& f)
{
    const auto H2 = hl_vertex_H(2, f), H3 = hl_vertex_H(3, f);
    const auto bH2 = hl_vertex_Hbar(2, f), bH3 = hl_vertex_Hbar(3, f);
    return H3 + (e1(H2) - H3).scaled(q1) + (e1(bH2) - bH3).scaled(QTPoly::q(2)) + bH3.scaled(QTPoly::q(3));
}

SchurExpansion H3qt_factored(const SchurExpansion& f)
{
    const auto H3 = hl_vertex_H(3, f), bH3 = hl_vertex_Hbar(3, f);
    return (H3 - bH3.scaled(QTPoly::q(2))).scaled(QTPoly(1) - q1) + e1(H2qt(f)).scaled(q1);
}

SchurExpansion H4qt(const SchurExpansion& f)
{
    const auto H2 = hl_vertex_H(2, f), H3 = hl_vertex_H(3, f), H4 = hl_vertex_H(4, f);
    const auto bH2 = hl_vertex_Hbar(2, f), bH3 = hl_vertex_Hbar(3, f), bH4 = hl_vertex_Hbar(4, f);
    SchurExpansion out = H4;
    out += (mul_h(1, H3) - H4).scaled(QTPoly::q(1));
    out += (mul_h(2, H2) - H4).scaled(QTPoly::q(2));
    out += (mul_e(2, H2) - e1(H3) + H4 + mul_h(2, bH2) - mul_h(1, bH3) + bH4).scaled(QTPoly::q(3));
    out += (mul_e(2, bH2) - bH4).scaled(QTPoly::q(4));
    out += (e1(bH3) - bH4).scaled(QTPoly::q(5));
    out += bH4.scaled(QTPoly::q(6));
    return out;
}

SchurExpansion H4qt_factored(const SchurExpansion& f)
{
    const QTPoly one_q = QTPoly(1) - q1, one_q2 = QTPoly(1) - QTPoly::q(2);
    const auto H4 = hl_vertex_H(4, f), bH4 = hl_vertex_Hbar(4, f);
    const auto G2 = H2qt(f);
    SchurExpansion out = (H4 + bH4.scaled(QTPoly::q(3))).scaled(one_q * one_q2);
    out += e1(H3qt(f)).scaled(q1 * (QTPoly(1) + q1));
    out -= (mul_e(2, G2) + mul_h(2, G2).scaled(q1)).scaled(QTPoly::q(2));
    return out;
}

SchurExpansion H4qt_middle_form_as_printed(const SchurExpansion& f)
{
    const QTPoly one_q = QTPoly(1) - q1, one_q2 = QTPoly(1) - QTPoly::q(2);
    const auto H4 = hl_vertex_H(4, f), bH4 = hl_vertex_Hbar(4, f);
    const auto H3 = hl_vertex_H(3, f), bH3 = hl_vertex_Hbar(3, f);
    const auto G2 = H2qt(f);
    SchurExpansion out = (H4 + bH4.scaled(QTPoly::q(3))).scaled(one_q * one_q2);
    out -= e1(H3 - bH3.scaled(QTPoly::q(2))).scaled(q1 * one_q2);
    out += (mul_h(2, G2) + mul_e(2, G2).scaled(q1)).scaled(QTPoly::q(2));
    return out;
}

namespace {

std::atomic<bool> cache_enabled{true};
detail::Memo<std::vector<int>, SchurExpansion>& macdonald_memo()
{
    static detail::Memo<std::vector<int>, SchurExpansion> memo;
    return memo;
}

SchurExpansion macdonald_uncached(const Partition& mu);

SchurExpansion macdonald_lookup(const Partition& mu)
{
    if (!cache_enabled.load()) return macdonald_uncached(mu);
    return macdonald_memo().get(mu.parts(), [&] { return macdonald_uncached(mu); });
}

SchurExpansion macdonald_uncached(const Partition& mu)
{
    const SupportedShape s = require_supported(mu);
    if (s.conjugated) return omega(swap_qt(macdonald_lookup(s.base())));
    if (s.family == ShapeFamily::two_column) {
        SchurExpansion f = hall_littlewood(Partition(std::vector<int>(static_cast<std::size_t>(s.b), 1)));
        for (int i = 0; i < s.a; ++i) f = H2qt(f);
        return f;
    }
    SupportedShape inner{ShapeFamily::two_column, s.a, s.b, false};
    const auto base = macdonald_lookup(inner.base());
    return s.family == ShapeFamily::three_plus ? H3qt(base) : H4qt(base);
}

} // namespace

SchurExpansion macdonald(const Partition& mu) { return macdonald_lookup(mu); }

void set_macdonald_cache(bool enabled) { cache_enabled.store(enabled); }
void clear_macdonald_cache() { macdonald_memo().clear(); }

QTPoly kostka(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw DomainError("kostka: |lambda| = " + std::to_string(lambda.size()) + " but |mu| = " + std::to_string(mu.size()));
    return macdonald(mu).coeff(lambda);
}

QTPoly stembridge_coefficient(int a, int b, int i)
{
    if (i < 0 || i > a) return {};
    return QTPoly::q(a - i) * qt_pochhammer(QTPoly::monomial(1, a + b - i + 1), i) * gaussian_binomial_t(a, i);
}

namespace {

Partition shape_of(std::vector<int> head, int twos, int ones)
{
    head.insert(head.end(), static_cast<std::size_t>(twos), 2);
    head.insert(head.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(head));
}

} // namespace

HLExpansion stembridge_expansion(int a, int b)
{
    HLExpansion out;
    for (int i = 0; i <= a; ++i) out.add(shape_of({}, i, b + 2 * a - 2 * i), stembridge_coefficient(a, b, i));
    return out;
}

HLExpansion besteq_expansion(int a, int b)
{
    const int n = 2 * a + b;
    const QTPoly one(1);
    auto c = [](int x, int y, int i) { return stembridge_coefficient(x, y, i); };
    HLExpansion out;
    const QTPoly lead = (one - QTPoly::monomial(2, a + b + 1)) * (one - QTPoly::monomial(1, a + 1));
    for (int i = 0; i <= a; ++i) out.add(shape_of({3}, i, n - 2 * i), c(a, b, i) * lead);
    out.add(shape_of({}, 0, n + 3), QTPoly::q(a + 3));
    const QTPoly qq = QTPoly::q(2) * (q1 - one); // q^2 (q - 1)
    for (int i = 1; i <= a + 2; ++i) {
        QTPoly coeff = q1 * c(a + 1, b, i);
        coeff += (one - QTPoly::t(n + 4 - 2 * i)) * q1 * c(a + 1, b, i - 1);
        coeff += qq * c(a, b, i) * QTPoly::t(i);
        if (i >= 1) coeff -= qq * c(a, b, i - 1) * QTPoly::t(n + 2 - i) * (one + QTPoly::t());
        if (i >= 2) coeff -= qq * c(a, b, i - 2) * QTPoly::t(n + 3 - i) * (one - QTPoly::t(n + 4 - 2 * i));
        if (coeff.is_zero()) continue; // i = a+2 with b = 0 has no shape and vanishes
        out.add(shape_of({}, i, n + 3 - 2 * i), coeff);
    }
    return out;
}

const std::vector<HeadGroup>& head_groups(int m)
{
    using T = Tableau;
    auto H = [](int k) { return [k](const SchurExpansion& f) { return hl_vertex_H(k, f); }; };
    auto bH = [](int k) { return [k](const SchurExpansion& f) { return hl_vertex_Hbar(k, f); }; };
    static const std::vector<HeadGroup> three = {
        {{T::parse("1,2,3")}, 0, "H3", H(3)},
        {{T::parse("1,3/2")}, 1, "e1 H2 - H3",
         [](const SchurExpansion& f) { return e1(hl_vertex_H(2, f)) - hl_vertex_H(3, f); }},
        {{T::parse("1,2/3")}, 2, "e1 bH2 - bH3",
         [](const SchurExpansion& f) { return e1(hl_vertex_Hbar(2, f)) - hl_vertex_Hbar(3, f); }},
        {{T::parse("1/2/3")}, 3, "bH3", bH(3)},
    };
    static const std::vector<HeadGroup> four = {
        {{T::parse("1,2,3,4")}, 0, "H4", H(4)},
        {{T::parse("1,3,4/2")}, 1, "e1 H3 - H4",
         [](const SchurExpansion& f) { return e1(hl_vertex_H(3, f)) - hl_vertex_H(4, f); }},
        {{T::parse("1,2,4/3"), T::parse("1,2/3,4")}, 2, "h2 H2 - H4",
         [](const SchurExpansion& f) { return mul_h(2, hl_vertex_H(2, f)) - hl_vertex_H(4, f); }},
        {{T::parse("1,2,3/4")}, 3, "h2 bH2 - h1 bH3 + bH4",
         [](const SchurExpansion& f) {
             return mul_h(2, hl_vertex_Hbar(2, f)) - mul_h(1, hl_vertex_Hbar(3, f)) + hl_vertex_Hbar(4, f);
         }},
        {{T::parse("1,4/2/3")}, 3, "e2 H2 - e1 H3 + H4",
         [](const SchurExpansion& f) {
             return mul_e(2, hl_vertex_H(2, f)) - e1(hl_vertex_H(3, f)) + hl_vertex_H(4, f);
         }},
        {{T::parse("1,3/2,4"), T::parse("1,3/2/4")}, 4, "e2 bH2 - bH4",
         [](const SchurExpansion& f) { return mul_e(2, hl_vertex_Hbar(2, f)) - hl_vertex_Hbar(4, f); }},
        {{T::parse("1,2/3/4")}, 5, "e1 bH3 - bH4",
         [](const SchurExpansion& f) { return e1(hl_vertex_Hbar(3, f)) - hl_vertex_Hbar(4, f); }},
        {{T::parse("1/2/3/4")}, 6, "bH4", bH(4)},
    };
    if (m == 3) return three;
    if (m == 4) return four;
    throw DomainError("head groups exist for sizes 3 and 4 only");
}

SchurExpansion component_HS(const Tableau& S, const SchurExpansion& f)
{
    if (S.size() == 3 || S.size() == 4)
        for (const auto& g : head_groups(S.size()))
            for (const auto& h : g.heads)
                if (h == S) return g.op(f);
    throw DomainError("no component operator for head " + S.to_string());
}

} // namespace qtk
