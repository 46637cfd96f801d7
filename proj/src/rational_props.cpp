#include "qtk/error.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/oracle.hpp"

#include <functional>
#include <map>
#include <optional>

namespace qtk {

namespace {

using Q = QTRational;
using HLCoeffs = std::map<Partition, Q, PartitionOrder>;

Partition shape_of(std::vector<int> head, int twos, int ones)
{
    head.insert(head.end(), static_cast<std::size_t>(twos), 2);
    head.insert(head.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(head));
}

// Arithmetic at one point; exponents of t may be negative.
class At {
public:
    explicit At(const QTPoint& p) : p_(p) {}

    Q q() const { return p_.q; }
    Q pw(const Q& x, int k) const
    {
        Q r = 1;
        for (int i = 0; i < (k < 0 ? -k : k); ++i) r *= x;
        return k < 0 ? Q(1 / r) : r;
    }
    /// 1 - q^i t^j
    Q f(int i, int j) const { return 1 - pw(p_.q, i) * pw(p_.t, j); }
    Q tp(int j) const { return pw(p_.t, j); }
    Q c(int x, int y, int i) const
    {
        if (i < 0 || i > x || y < 0) return 0;
        return stembridge_coefficient(x, y, i).eval(p_.q, p_.t);
    }
    static Q div(const Q& num, const Q& den)
    {
        if (den == 0) throw DegeneratePoint("rational coefficient has a vanishing denominator");
        Q r = num / den;
        r.canonicalize();
        return r;
    }

private:
    QTPoint p_;
};

void add_hl(HLCoeffs& out, std::vector<int> head, int twos, int ones, const Q& c, std::string& problem)
{
    if (c == 0) return;
    if (twos < 0 || ones < 0) {
        problem = "nonzero coefficient on an undefined shape";
        return;
    }
    auto& slot = out[shape_of(std::move(head), twos, ones)];
    slot += c;
}

NumericSchur hl_to_numeric(const HLCoeffs& coeffs, const QTPoint& p)
{
    NumericSchur out;
    for (const auto& [nu, c] : coeffs) out += c * evaluate(hall_littlewood(nu), p);
    return out;
}

// Hall-Littlewood coefficients of H_(3 2^a 1^b) from the closed rational formula. Where the
// printed expression is 0/0 (index above a) the coefficient lemmas give its value.
HLCoeffs three_head_table(const At& P, int a, int b, std::string& problem)
{
    const int n = 2 * a + b;
    const Q q = P.q();
    HLCoeffs out;
    const Q lead = P.f(2, a + b + 1) * P.f(1, a + 1);
    for (int i = 0; i <= a; ++i) add_hl(out, {3}, i, n - 2 * i, P.c(a, b, i) * lead, problem);
    add_hl(out, {}, 0, n + 3, P.pw(q, a + 3), problem);
    for (int i = 1; i <= a + 2; ++i) {
        Q coeff;
        if (i <= a) {
            const Q s1 = At::div(lead, P.f(0, a + 1 - i) * P.f(1, a + b + 1 - i));
            const Q s2 = q * At::div(lead * P.f(0, i) * P.f(0, n + 4 - 2 * i),
                                     P.f(1, a + 1 + b - i) * P.f(0, a + 1 - i) * P.f(0, a + 2 - i) *
                                         P.f(1, a + 2 + b - i));
            const Q s3 = q * At::div(P.f(2, a + b + 1) * P.f(0, b) * P.f(1, 0) * P.f(0, a + 2),
                                     P.f(0, a + 2 - i) * P.f(1, a + 1 + b - i) * P.f(0, a + 1 - i) * P.f(1, b));
            const Q s4 = At::div(P.f(2, b) * P.f(1, a + 1) * P.f(1, 0) * P.f(1, a + b + 2),
                                 P.f(1, a + b + 2 - i) * P.f(1, a + 1 + b - i) * P.f(0, a + 1 - i) * P.f(1, b));
            coeff = P.c(a, b, i) * q * (s1 + s2 - s3 - s4);
        } else {
            // c_i^(a,b) / ((1-t^(a+1-i))(1-q t^(a+b+1-i))) and its two further reductions.
            const Q base = q * P.f(1, a + b + 1) * P.f(0, a + 1);
            const Q K = At::div(P.c(a + 1, b, i), base);
            const Q L = At::div(P.c(a + 1, b, i - 1), q * base);
            const Q M = At::div(P.c(a + 2, b, i) * P.f(1, a + b + 2 - i), q * P.f(1, a + b + 2) * base);
            coeff = q * K * lead + q * q * L * lead * P.f(0, n + 4 - 2 * i) -
                    q * q * M * P.f(2, a + b + 1) * P.f(0, b) * P.f(1, 0) / P.f(1, b) -
                    q * K * At::div(P.f(2, b) * P.f(1, a + 1) * P.f(1, 0) * P.f(1, a + b + 2),
                                    P.f(1, a + b + 2 - i) * P.f(1, b));
        }
        add_hl(out, {}, i, n + 3 - 2 * i, coeff, problem);
    }
    return out;
}

Q d_coeff(const HLCoeffs& t3, int i, int n)
{
    if (i < 0 || n - 2 * i < 0) return 0;
    auto it = t3.find(shape_of({3}, i, n - 2 * i));
    return it == t3.end() ? Q(0) : it->second;
}

Q e_coeff(const HLCoeffs& t3, int i, int n)
{
    if (i < 0 || n + 3 - 2 * i < 0) return 0;
    auto it = t3.find(shape_of({}, i, n + 3 - 2 * i));
    return it == t3.end() ? Q(0) : it->second;
}

HLCoeffs four_head_table(const At& P, int a, int b, std::string& problem)
{
    const int N = 2 * a + b;
    const Q q = P.q();
    const Q Ap = -At::div(P.f(1, 0) * P.f(2, 0) * P.f(3, a + b + 1) * P.f(2, a + 1),
                          P.f(2, a + b + 1) * P.f(1, a + 1) * P.f(0, a + 1) * P.f(1, a + b + 1));
    const Q Bp = -At::div(P.f(0, b) * P.f(2, 0) * P.f(3, a + b + 1), P.f(1, b) * P.f(2, a + b + 1) * P.f(0, a + 1));
    const Q Cp = -At::div(P.f(2, b) * P.f(2, 0) * P.f(2, a + 1), P.f(1, b) * P.f(1, a + 1) * P.f(1, a + b + 1));
    const Q Dp = At::div(P.f(1, 0) * P.f(2, 0) * P.f(3, a + b + 1) * P.f(2, a + 1), P.f(0, a + 1) * P.f(1, a + b + 1));
    const Q Ep = At::div(Dp, P.f(1, 0) * P.f(2, 0));
    HLCoeffs lower, upper; // H_(3 2^(a+1) 1^(b-1)) and H_(3 2^a 1^(b+1))
    if (b >= 1) lower = three_head_table(P, a + 1, b - 1, problem);
    upper = three_head_table(P, a, b + 1, problem);
    auto c1 = [&](int i) { return P.c(a + 1, b, i); };
    HLCoeffs out;
    for (int i = 0; i <= a + 3; ++i) {
        Q v = Ap * P.c(a + 2, b, i) + Cp * e_coeff(upper, i, N + 1) + Ep * P.f(1, 0) * c1(i - 1) +
              q * Ep *
                  (c1(i) + (2 - P.tp(N - 2 * i + 5) - P.tp(N - 2 * i + 4)) * c1(i - 1) +
                   P.f(0, N - 2 * i + 6) * P.f(0, N - 2 * i + 5) * c1(i - 2));
        if (b >= 1) v += Bp * e_coeff(lower, i, N + 1);
        add_hl(out, {}, i, 4 + N - 2 * i, v, problem);
    }
    for (int i = 0; i <= a + 2; ++i) {
        Q v = Cp * d_coeff(upper, i, N + 1) +
              Ep * P.f(1, 0) * (P.f(0, N + 2 - 2 * i) * c1(i) + P.f(0, i + 1) * c1(i + 1)) +
              q * Ep * (2 * P.f(0, i + 1) * c1(i + 1) + P.f(0, N + 2 - 2 * i) * (2 - P.tp(i + 1) - P.tp(i)) * c1(i));
        if (b >= 1) v += Bp * d_coeff(lower, i, N + 1);
        add_hl(out, {3}, i, 1 + N - 2 * i, v, problem);
    }
    for (int i = 0; i <= a + 1; ++i) {
        add_hl(out, {3, 3}, i, N - 2 * i - 2, q * Ep * P.f(0, i + 2) * P.f(0, i + 1) * c1(i + 2), problem);
        add_hl(out, {4}, i, N - 2 * i, Ep * P.f(0, i + 1) * P.f(1, 1) * c1(i + 1), problem);
    }
    return out;
}

NumericSchur mac(const Partition& mu, const QTPoint& p) { return evaluate(macdonald(mu), p); }

void require_point(const QTPoint& p)
{
    if (p.q == 0 || p.t == 0) throw DegeneratePoint("q and t must be nonzero");
    At P(p);
    for (int i = 0; i <= 3; ++i)
        for (int j = -16; j <= 16; ++j)
            if ((i || j) && P.f(i, j) == 0)
                throw DegeneratePoint("1 - q^" + std::to_string(i) + " t^" + std::to_string(j) + " vanishes");
}

std::string point_text(const QTPoint& p) { return "(q,t)=(" + p.q.get_str() + "," + p.t.get_str() + ")"; }

// One named check over all points; body returns an empty string on success.
CheckResult over_points(std::string name, const nlohmann::json& params, const std::vector<QTPoint>& points,
                        const std::function<std::string(const QTPoint&)>& body)
{
    for (const auto& p : points) {
        auto why = body(p);
        if (!why.empty()) return {std::move(name), params, false, point_text(p) + ": " + why};
    }
    return {std::move(name), params, true, "holds at " + std::to_string(points.size()) + " points"};
}

std::string compare(const NumericSchur& lhs, const NumericSchur& rhs)
{
    if (lhs == rhs) return {};
    for (const auto& [lambda, c] : lhs.terms)
        if (rhs.coeff(lambda) != c) return "coefficient of s" + lambda.pretty() + " differs";
    for (const auto& [lambda, c] : rhs.terms)
        if (lhs.coeff(lambda) != c) return "coefficient of s" + lambda.pretty() + " differs";
    return "mismatch";
}

} // namespace

Report verify_rational_props(int a, int b, const std::vector<QTPoint>& points)
{
    if (a < 0 || b < 0) throw DomainError("verify_rational_props: a and b must be nonnegative");
    if (3 + 2 * a + b > 8) throw DomainError("verify_rational_props: 3+2a+b must be at most 8");
    for (const auto& p : points) require_point(p);
    const nlohmann::json params = {{"a", a}, {"b", b}, {"points", points.size()}};
    Report out;

    out.push_back(over_points("coefficient_lemma_lower_y", params, points, [&](const QTPoint& p) -> std::string {
        At P(p);
        for (int x = 1; x <= a + 2; ++x)
            for (int y = 1; y <= b + 2; ++y)
                for (int z = 0; z < x; ++z)
                    if (P.c(x, y, z) != P.c(x, y - 1, z) * At::div(P.f(1, x + y), P.f(1, x + y - z)))
                        return "fails at (x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
                               std::to_string(z) + ")";
        return {};
    }));
    out.push_back(over_points("coefficient_lemma_raise_index", params, points, [&](const QTPoint& p) -> std::string {
        At P(p);
        for (int x = 1; x <= a + 2; ++x)
            for (int y = 0; y <= b + 2; ++y)
                for (int z = 0; z < x; ++z)
                    if (P.c(x, y, z) !=
                        P.c(x, y, z + 1) * P.q() * At::div(P.f(0, z + 1), P.f(0, x - z) * P.f(1, x + y - z)))
                        return "fails at (x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
                               std::to_string(z) + ")";
        return {};
    }));
    out.push_back(over_points("coefficient_lemma_lower_x", params, points, [&](const QTPoint& p) -> std::string {
        At P(p);
        for (int x = 1; x <= a + 2; ++x)
            for (int y = 0; y <= b + 2; ++y)
                for (int z = 0; z < x; ++z)
                    if (P.c(x, y, z) != P.c(x - 1, y, z) * P.q() *
                                            At::div(P.f(1, x + y) * P.f(0, x), P.f(1, x + y - z) * P.f(0, x - z)))
                        return "fails at (x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
                               std::to_string(z) + ")";
        return {};
    }));

    const Partition two_up = shape_of({}, a + 1, b), three = shape_of({3}, a, b);
    out.push_back(over_points("e1_pieri_two_column", params, points, [&](const QTPoint& p) {
        At P(p);
        const Q A = At::div(P.f(0, a + 1) * P.f(1, a + b + 1), P.f(2, a + b + 1) * P.f(1, a + 1));
        const Q B = At::div(P.f(0, b) * P.f(1, 0), P.f(1, b) * P.f(1, a + 1));
        const Q C = At::div(P.f(1, 0) * P.f(2, b), P.f(1, b) * P.f(2, a + b + 1));
        NumericSchur rhs = A * mac(three, p);
        if (b >= 1) rhs += B * mac(shape_of({}, a + 2, b - 1), p);
        rhs += C * mac(shape_of({}, a + 1, b + 1), p);
        return compare(evaluate(mul_e(1, macdonald(two_up)), p), rhs);
    }));
    out.push_back(over_points("three_head_from_e1_pieri", params, points, [&](const QTPoint& p) {
        At P(p);
        const Q den = P.f(0, a + 1) * P.f(1, a + b + 1);
        const Q Ap = At::div(P.f(2, a + b + 1) * P.f(1, a + 1), den);
        const Q Bp = At::div(P.f(2, a + b + 1) * P.f(0, b) * P.f(1, 0), den * P.f(1, b));
        const Q Cp = At::div(P.f(2, b) * P.f(1, a + 1) * P.f(1, 0), den * P.f(1, b));
        NumericSchur rhs = Ap * evaluate(mul_e(1, macdonald(two_up)), p);
        if (b >= 1) rhs += Q(-Bp) * mac(shape_of({}, a + 2, b - 1), p);
        rhs += Q(-Cp) * mac(shape_of({}, a + 1, b + 1), p);
        return compare(mac(three, p), rhs);
    }));
    out.push_back(over_points("three_head_hl_coefficients", params, points, [&](const QTPoint& p) {
        std::string problem;
        const auto table = three_head_table(At(p), a, b, problem);
        if (!problem.empty()) return problem;
        return compare(mac(three, p), hl_to_numeric(table, p));
    }));

    if (4 + 2 * a + b <= 8) {
        const Partition four = shape_of({4}, a, b);
        auto g2 = [](const SchurExpansion& f, const QTPoint& p) {
            At P(p);
            return At::div(P.q(), P.f(1, 0) * P.f(2, 0)) * evaluate(mul_h(1, mul_h(1, f)), p) +
                   At::div(1, P.f(2, 0)) * evaluate(mul_h(2, f), p);
        };
        out.push_back(over_points("g2_pieri_two_column", params, points, [&](const QTPoint& p) {
            At P(p);
            const Q A = At::div(1, P.f(2, a + b + 1) * P.f(1, a + 1));
            const Q B = At::div(P.f(0, b) * P.f(1, a + b + 1), P.f(1, 0) * P.f(2, a + 1) * P.f(1, b) * P.f(2, a + b + 1));
            const Q C = At::div(P.f(0, a + 1) * P.f(2, b), P.f(1, 0) * P.f(1, b) * P.f(3, a + b + 1) * P.f(1, a + 1));
            const Q D = At::div(P.f(0, a + 1) * P.f(1, a + b + 1),
                                P.f(1, 0) * P.f(2, 0) * P.f(3, a + b + 1) * P.f(2, a + 1));
            NumericSchur rhs = A * mac(shape_of({}, a + 2, b), p);
            if (b >= 1) rhs += B * mac(shape_of({3}, a + 1, b - 1), p);
            rhs += C * mac(shape_of({3}, a, b + 1), p);
            rhs += D * mac(four, p);
            return compare(g2(macdonald(two_up), p), rhs);
        }));
        out.push_back(over_points("four_head_from_g2_pieri", params, points, [&](const QTPoint& p) {
            At P(p);
            const Q Ap = -At::div(P.f(1, 0) * P.f(2, 0) * P.f(3, a + b + 1) * P.f(2, a + 1),
                                  P.f(2, a + b + 1) * P.f(1, a + 1) * P.f(0, a + 1) * P.f(1, a + b + 1));
            const Q Bp = -At::div(P.f(0, b) * P.f(2, 0) * P.f(3, a + b + 1),
                                  P.f(1, b) * P.f(2, a + b + 1) * P.f(0, a + 1));
            const Q Cp = -At::div(P.f(2, b) * P.f(2, 0) * P.f(2, a + 1), P.f(1, b) * P.f(1, a + 1) * P.f(1, a + b + 1));
            const Q Dp = At::div(P.f(1, 0) * P.f(2, 0) * P.f(3, a + b + 1) * P.f(2, a + 1),
                                 P.f(0, a + 1) * P.f(1, a + b + 1));
            NumericSchur rhs = Ap * mac(shape_of({}, a + 2, b), p);
            if (b >= 1) rhs += Bp * mac(shape_of({3}, a + 1, b - 1), p);
            rhs += Cp * mac(shape_of({3}, a, b + 1), p);
            rhs += Dp * g2(macdonald(two_up), p);
            return compare(mac(four, p), rhs);
        }));
        out.push_back(over_points("four_head_hl_coefficients", params, points, [&](const QTPoint& p) {
            std::string problem;
            const auto table = four_head_table(At(p), a, b, problem);
            if (!problem.empty()) return problem;
            return compare(mac(four, p), hl_to_numeric(table, p));
        }));
    }
    return out;
}

} // namespace qtk
