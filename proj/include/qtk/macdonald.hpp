#pragma once

#include "qtk/report.hpp"
#include "qtk/schur.hpp"
#include "qtk/tableau.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtk {

enum class ShapeFamily { two_column, three_plus, four_plus };

/// (2^a 1^b), (3 2^a 1^b) or (4 2^a 1^b), possibly conjugated.
struct SupportedShape {
    ShapeFamily family = ShapeFamily::two_column;
    int a = 0;
    int b = 0;
    bool conjugated = false;

    [[nodiscard]] int head() const noexcept; // 2, 3 or 4 (2 means no head)
    /// The unconjugated shape (m 2^a 1^b), or (2^a 1^b).
    [[nodiscard]] Partition base() const;
    [[nodiscard]] Partition partition() const;
    friend bool operator==(const SupportedShape&, const SupportedShape&) = default;
};

[[nodiscard]] std::optional<SupportedShape> classify_shape(const Partition& mu);
/// Throws UnsupportedShape naming mu.
[[nodiscard]] SupportedShape require_supported(const Partition& mu);

/// H_mu[X;t] = sum over column-strict T of content mu of t^charge(T) s_shape(T).
[[nodiscard]] SchurExpansion hall_littlewood(const Partition& mu);
[[nodiscard]] SchurExpansion hl_to_schur(const HLExpansion& f);

[[nodiscard]] SchurExpansion H2qt(const SchurExpansion& f);
/// Four-term q-expansion.
[[nodiscard]] SchurExpansion H3qt(const SchurExpansion& f);
/// (1-q)(H_3^t - q^2 bar-H_3^t) + q e_1 H2qt.
[[nodiscard]] SchurExpansion H3qt_factored(const SchurExpansion& f);
/// Eight-term q-expansion.
[[nodiscard]] SchurExpansion H4qt(const SchurExpansion& f);
/// (1-q)(1-q^2)(H_4^t + q^3 bar-H_4^t) + q(1+q) e_1 H3qt - q^2(e_2 + q h_2) H2qt.
[[nodiscard]] SchurExpansion H4qt_factored(const SchurExpansion& f);
/// The middle factored form exactly as published, with -q(1-q^2) e_1(...). Kept only so the
/// verification suite can exhibit that it differs from the other two.
[[nodiscard]] SchurExpansion H4qt_middle_form_as_printed(const SchurExpansion& f);

/// H_mu[X;q,t] in the Schur basis. Throws UnsupportedShape.
[[nodiscard]] SchurExpansion macdonald(const Partition& mu);
/// Turn the internal memo table on or off (results are identical either way).
void set_macdonald_cache(bool enabled);
void clear_macdonald_cache();

/// Coefficient of s_lambda in H_mu[X;q,t].
[[nodiscard]] QTPoly kostka(const Partition& lambda, const Partition& mu);

/// c_i^{(a,b)} = q^{a-i} (q t^{a+b-i+1}; t)_i [a choose i]_t; zero outside 0 <= i <= a.
[[nodiscard]] QTPoly stembridge_coefficient(int a, int b, int i);
/// H_{(2^a 1^b)}[X;q,t] in the Hall-Littlewood basis.
[[nodiscard]] HLExpansion stembridge_expansion(int a, int b);
/// H_{(3 2^a 1^b)}[X;q,t] in the Hall-Littlewood basis, assembled from the c coefficients.
[[nodiscard]] HLExpansion besteq_expansion(int a, int b);

/// Component operators H^S. A group holds one head tableau, or two heads whose
/// operators are only known as a sum.
struct HeadGroup {
    std::vector<Tableau> heads;
    int gamma = 0;          // power of q attached to the group
    std::string formula;    // operator in words, e.g. "e1 H3 - H4"
    LinearOperator op;
};
/// Size 3 (four groups) or size 4 (eight groups), ordered by gamma.
[[nodiscard]] const std::vector<HeadGroup>& head_groups(int m);
/// Apply the group containing S. Throws for an unknown S.
[[nodiscard]] SchurExpansion component_HS(const Tableau& S, const SchurExpansion& f);

/// Exact Hall-Littlewood basis identities (commutations, snake rule, Pieri translations,
/// bar-H_3 and bar-H_4 on H_{(2^x 1^y)}) for all parameters of total size <= max_n.
[[nodiscard]] Report hl_identity_suite(int max_n);

} // namespace qtk
