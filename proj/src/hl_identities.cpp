#include "qtk/error.hpp"
#include "qtk/macdonald.hpp"

#include <functional>
#include <stdexcept>

namespace qtk {

namespace {

using Op = std::function<SchurExpansion(const SchurExpansion&)>;
const QTPoly kOne(1);

QTPoly t(int k) { return QTPoly::t(k); }

SchurExpansion H(int m, const SchurExpansion& f) { return hl_vertex_H(m, f); }
SchurExpansion bH(int m, const SchurExpansion& f) { return hl_vertex_Hbar(m, f); }

// Adds coeff * H_{(head, 2^twos, 1^ones)}; a shape with a negative count must carry a zero coefficient.
void addh(HLExpansion& out, std::vector<int> head, int twos, int ones, const QTPoly& coeff)
{
    if (coeff.is_zero()) return;
    if (twos < 0 || ones < 0) throw std::logic_error("nonzero coefficient on an undefined shape");
    head.insert(head.end(), static_cast<std::size_t>(twos), 2);
    head.insert(head.end(), static_cast<std::size_t>(ones), 1);
    out.add(Partition(std::move(head)), coeff);
}

SchurExpansion HL(std::vector<int> head, int twos, int ones)
{
    HLExpansion e;
    addh(e, std::move(head), twos, ones, kOne);
    return hl_to_schur(e);
}

std::string first_difference(const SchurExpansion& lhs, const SchurExpansion& rhs)
{
    const auto diff = lhs - rhs;
    if (diff.is_zero()) return {};
    const auto& [lambda, c] = *diff.terms().begin();
    return "lhs - rhs has s" + lambda.pretty() + " coefficient " + c.to_string();
}

// Operator identity lhs == rhs on every s_lambda with |lambda| <= max_size.
CheckResult operator_check(std::string name, nlohmann::json params, int max_size, const Op& lhs, const Op& rhs)
{
    CheckResult r{std::move(name), std::move(params), true, ""};
    int tested = 0;
    for (int d = 0; d <= max_size && r.pass; ++d)
        for (const auto& lambda : partitions_of(d)) {
            const auto f = schur(lambda);
            auto why = first_difference(lhs(f), rhs(f));
            ++tested;
            if (!why.empty()) {
                r.pass = false;
                r.detail = "fails on s" + lambda.pretty() + ": " + why;
                break;
            }
        }
    if (r.pass) r.detail = "equal on " + std::to_string(tested) + " Schur functions";
    return r;
}

CheckResult equality_check(std::string name, nlohmann::json params, const SchurExpansion& lhs,
                           const SchurExpansion& rhs)
{
    auto why = first_difference(lhs, rhs);
    return {std::move(name), std::move(params), why.empty(), why.empty() ? "exact equality" : why};
}

Partition shape_of(std::vector<int> head, int twos, int ones)
{
    head.insert(head.end(), static_cast<std::size_t>(twos), 2);
    head.insert(head.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(head));
}

SchurExpansion component_sum(int m, const SchurExpansion& f)
{
    SchurExpansion out;
    for (const auto& g : head_groups(m)) out += g.op(f).scaled(QTPoly::q(g.gamma));
    return out;
}

HLExpansion bar_H3_rhs(int x, int y, int last_shift)
{
    HLExpansion e;
    addh(e, {}, x, y + 3, t(x));
    addh(e, {}, x + 1, y + 1, -(t(x + y + 1) * (kOne + t(1))));
    addh(e, {}, x + 2, y - 1, -(t(x + y + 1) * (kOne - t(y))));
    addh(e, {3}, x, y, t(2 * x + y + last_shift));
    return e;
}

HLExpansion bar_H4_rhs(int a, int b)
{
    HLExpansion e;
    const QTPoly tt = t(a + b + 1), tu = t(2 * a + b + 2);
    addh(e, {}, a, b + 4, t(a));
    addh(e, {}, a + 1, b + 2, -(tt * (kOne + t(1) + t(2))));
    addh(e, {}, a + 2, b, -(tt * (kOne + t(1) - t(b) - t(b + 1) - t(b + 2))));
    if (b >= 2) addh(e, {}, a + 3, b - 2, -(tt * (kOne - t(b - 1)) * (kOne - t(b))));
    addh(e, {3}, a, b + 1, tu * (kOne + t(1)));
    addh(e, {3}, a + 1, b - 1, tu * (kOne + t(1)) * (kOne - t(b)));
    addh(e, {3, 3}, a - 1, b, tu * (kOne - t(a)));
    addh(e, {4}, a, b, -t(2 * a + b + 3));
    return e;
}

} // namespace

Report hl_identity_suite(int max_n)
{
    if (max_n > 9) throw DomainError("hl_identity_suite: max_n must be at most 9");
    Report out;
    if (max_n < 1) return out;
    const int op_range = std::min(5, max_n);

    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            out.push_back(operator_check(
                "comm1_barH_n_H_m", {{"m", m}, {"n", n}}, op_range,
                [=](const SchurExpansion& f) { return bH(n, H(m, f)); },
                [=](const SchurExpansion& f) { return H(m, bH(n, f)).scaled(t(m - 1)); }));
            out.push_back(operator_check(
                "comm3_H_relation", {{"m", m}, {"n", n}}, op_range,
                [=](const SchurExpansion& f) { return H(m - 1, H(n, f)); },
                [=](const SchurExpansion& f) {
                    return (H(m, H(n - 1, f)) + H(n, H(m - 1, f))).scaled(t(1)) - H(n - 1, H(m, f));
                }));
        }
    for (int m = 1; m <= 4; ++m)
        out.push_back(operator_check(
            "comm2_H_m_H_m+1", {{"m", m}}, op_range, [=](const SchurExpansion& f) { return H(m, H(m + 1, f)); },
            [=](const SchurExpansion& f) { return H(m + 1, H(m, f)).scaled(t(1)); }));

    // Snake rule: every admissible k gives the series form.
    for (int m = 2; m <= 4; ++m) {
        CheckResult r{"snake_rule_k_independence", {{"m", m}}, true, ""};
        int tested = 0;
        for (int d = 0; d <= std::min(6, max_n) && r.pass; ++d)
            for (const auto& lambda : partitions_of(d)) {
                const auto f = schur(lambda);
                const auto series = H(m, f);
                for (int k = std::max(0, lambda.row(1) - m); k <= 6; ++k) {
                    ++tested;
                    auto why = first_difference(hl_vertex_H_snake(m, k, f), series);
                    if (!why.empty()) {
                        r.pass = false;
                        r.detail = "k=" + std::to_string(k) + " on s" + lambda.pretty() + ": " + why;
                        break;
                    }
                }
                if (!r.pass) break;
            }
        if (r.pass) r.detail = std::to_string(tested) + " (lambda, k) cases agree";
        out.push_back(std::move(r));
    }

    // Pieri translations on the Hall-Littlewood basis.
    for (int x = 0; 2 * x <= max_n; ++x)
        for (int y = 0; 2 * x + y <= max_n; ++y) {
            const nlohmann::json p = {{"x", x}, {"y", y}};
            const auto base = HL({}, x, y);
            if (2 * x + y + 1 <= max_n) {
                HLExpansion e;
                addh(e, {}, x, y + 1, kOne);
                addh(e, {}, x + 1, y - 1, kOne - t(y));
                addh(e, {3}, x - 1, y, kOne - t(x));
                out.push_back(equality_check("e1_on_HL_2x1y", p, mul_e(1, base), hl_to_schur(e)));
            }
            if (2 * x + y + 2 <= max_n) {
                HLExpansion e;
                addh(e, {}, x + 1, y, kOne);
                addh(e, {3}, x, y - 1, kOne - t(y));
                addh(e, {3}, x - 1, y + 1, kOne - t(x));
                addh(e, {4}, x - 1, y, kOne - t(x));
                out.push_back(equality_check("h2_on_HL_2x1y", p, mul_h(2, base), hl_to_schur(e)));

                HLExpansion g;
                addh(g, {}, x, y + 2, kOne);
                addh(g, {}, x + 1, y, QTPoly(2) - t(y + 1) - t(y));
                if (y >= 1) addh(g, {}, x + 2, y - 2, (kOne - t(y)) * (kOne - t(y - 1)));
                addh(g, {3}, x - 1, y + 1, (kOne - t(x)).scale(2));
                addh(g, {3}, x, y - 1, (kOne - t(y)) * (QTPoly(2) - t(x + 1) - t(x)));
                if (x >= 1) addh(g, {3, 3}, x - 2, y, (kOne - t(x)) * (kOne - t(x - 1)));
                addh(g, {4}, x - 1, y, (kOne - t(x)) * (kOne - t(1)));
                out.push_back(equality_check("h1h1_on_HL_2x1y", p, mul_h(1, mul_h(1, base)), hl_to_schur(g)));
            }
            if (2 * x + y + 3 <= max_n) {
                const auto lhs = bH(3, base);
                out.push_back(equality_check("barH3_on_HL_2x1y", p, lhs, hl_to_schur(bar_H3_rhs(x, y, 2))));
                // The exponent t^{2x+y+1} on the last term, as first published, must fail here.
                const bool differs = !(lhs == hl_to_schur(bar_H3_rhs(x, y, 1)));
                out.push_back({"barH3_on_HL_2x1y_exponent_2x+y+1_rejected", p, differs,
                               differs ? "last term needs t^(2x+y+2); t^(2x+y+1) gives a different function"
                                       : "the t^(2x+y+1) variant unexpectedly agrees"});
            }
            if (2 * x + y + 4 <= max_n) {
                out.push_back(equality_check("barH4_on_HL_2a1b", {{"a", x}, {"b", y}}, bH(4, base),
                                             hl_to_schur(bar_H4_rhs(x, y))));
                HLExpansion e;
                addh(e, {3}, x, y + 1, kOne);
                addh(e, {3}, x + 1, y - 1, kOne - t(y));
                addh(e, {3, 3}, x - 1, y, kOne - t(x));
                addh(e, {4}, x, y, kOne - t(1));
                out.push_back(
                    equality_check("e1_on_HL_32a1b", {{"a", x}, {"b", y}}, mul_e(1, HL({3}, x, y)), hl_to_schur(e)));
            }
        }

    out.push_back(operator_check("H3qt_factored_form_on_schur", nlohmann::json::object(), op_range, H3qt_factored,
                                 [](const SchurExpansion& f) { return H3qt(f); }));
    out.push_back(operator_check("H4qt_factored_form_on_schur", nlohmann::json::object(), op_range, H4qt_factored,
                                 [](const SchurExpansion& f) { return H4qt(f); }));
    {
        // The published middle form with -q(1-q^2) e1: on the input 1 its s_(4) coefficient
        // is 1 - 2q + 2q^3 instead of 1.
        const auto printed = H4qt_middle_form_as_printed(one());
        const QTPoly expected = kOne - QTPoly::q(1).scale(2) + QTPoly::q(3).scale(2);
        const QTPoly got = printed.coeff(Partition{4});
        const bool detected = got == expected && !(printed == H4qt(one()));
        out.push_back({"H4qt_middle_form_as_printed_detected", nlohmann::json::object(), detected,
                       "s(4) coefficient on input 1 is " + got.to_string() + "; first form gives " +
                           H4qt(one()).coeff(Partition{4}).to_string()});
    }

    // Closed expansions and operator forms against macdonald().
    for (int a = 0; 2 * a <= max_n; ++a)
        for (int b = 0; 2 * a + b <= max_n; ++b) {
            const nlohmann::json p = {{"a", a}, {"b", b}};
            const Partition two_col = shape_of({}, a, b);
            const auto base = macdonald(two_col);
            out.push_back(equality_check("stembridge_expansion", p, hl_to_schur(stembridge_expansion(a, b)), base));
            if (2 * a + b + 1 <= max_n) {
                // H_1 raises (2^a 1^b) to (2^a 1^{b+1}) up to t^a and the tilt q^j t^k -> q^j t^{k-j}.
                const auto raised = macdonald(shape_of({}, a, b + 1))
                                        .map_coeffs([&](const QTPoly& c) { return tilt_t_by_q(c.shift(0, a), -1); });
                out.push_back(equality_check("H1_raises_two_column", p, hl_vertex_H(1, base), raised));
            }
            if (2 * a + b + 3 <= max_n) {
                out.push_back(equality_check("three_head_expansion", p, hl_to_schur(besteq_expansion(a, b)),
                                             macdonald(shape_of({3}, a, b))));
                out.push_back(equality_check("H3qt_factored_form", p, H3qt_factored(base), H3qt(base)));
                out.push_back(equality_check("H3qt_component_sum", p, component_sum(3, base), H3qt(base)));
            }
            if (2 * a + b + 4 <= max_n) {
                const auto first = H4qt(base);
                out.push_back(equality_check("H4qt_factored_form", p, H4qt_factored(base), first));
                out.push_back(equality_check("H4qt_component_sum", p, component_sum(4, base), first));
                const bool differs = !(H4qt_middle_form_as_printed(base) == first);
                out.push_back({"H4qt_middle_form_with_minus_sign_rejected", p, differs,
                               differs ? "the -q(1-q^2) e1 variant differs; the sign must be +"
                                       : "the -q(1-q^2) e1 variant unexpectedly agrees"});
            }
        }

    if (max_n >= 4) {
        HLExpansion e;
        addh(e, {}, 0, 4, kOne);
        addh(e, {}, 1, 2, -(t(1) * (kOne + t(1) + t(2))));
        addh(e, {}, 2, 0, t(3));
        addh(e, {3}, 0, 1, t(2) * (kOne + t(1)));
        addh(e, {4}, 0, 0, -t(3));
        out.push_back(equality_check("barH4_base_case", nlohmann::json::object(), bH(4, one()),
                                     hl_to_schur(e)));
    }
    return out;
}

} // namespace qtk
