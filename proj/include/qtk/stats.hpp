#pragma once

#include "qtk/macdonald.hpp"
#include "qtk/tableau.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtk {

/// Block builders. T has shape lambda of size n and rho is a partition of 2n+m.
/// Row family: rho/lambda must be a horizontal strip.
[[nodiscard]] Tableau add_row_block(int m, const Partition& rho, const Tableau& T);
/// Recovers T from add_row_block(m, rho, T) and rho.
[[nodiscard]] Tableau remove_row_block(int m, const Partition& rho, const Tableau& built);
/// Column family: rho/lambda must be a vertical strip.
[[nodiscard]] Tableau add_col_block(int m, const Partition& rho, const Tableau& T);
[[nodiscard]] Tableau remove_col_block(int m, const Partition& rho, const Tableau& built);

/// Strip the row 1..m (or column 1..m) and reinsert what else was in that row (column).
[[nodiscard]] Tableau unbuild(int m, const Tableau& T);
/// Remove labels 1..h, slide the rest into place and lower by h.
[[nodiscard]] Tableau delete_prefix(int h, const Tableau& T);

enum class Block { H, V, S };

struct TypeSequence {
    std::optional<Tableau> head;
    std::vector<Block> blocks;

    /// "(1,3/2)|V,H,S", or "V,V,H" without a head.
    [[nodiscard]] std::string to_string() const;
    static TypeSequence parse(std::string_view text);
    friend bool operator==(const TypeSequence&, const TypeSequence&) = default;
};

/// Dominoes from repeated unbuild(2, .), a of them, then singles.
[[nodiscard]] TypeSequence type_two_col(const Tableau& T, int a);

enum class Theta { Hti4, Hti3_K1, Hti2_K2, Hti3, Hti2_K1 };
[[nodiscard]] std::string theta_name(Theta th);
[[nodiscard]] Tableau apply_theta(Theta th, const Tableau& T);

struct StatEntry {
    Tableau head;
    int alpha = 0;
    int beta = 0;
    Theta theta = Theta::Hti4;
    int gamma = 0;
};
/// Heads of size 3 or 4 in a fixed order.
[[nodiscard]] const std::vector<StatEntry>& stat_table(int m);
/// Throws DomainError for an unknown head.
[[nodiscard]] const StatEntry& stat_entry(const Tableau& S);

/// Labels 1..m of a standard tableau, as a tableau.
[[nodiscard]] Tableau head_of(const Tableau& T, int m);

struct StatValues {
    int a = 0; // t exponent
    int b = 0; // q exponent
    friend bool operator==(const StatValues&, const StatValues&) = default;
};

/// (a_mu, b_mu) for mu = (2^a 1^b), (3 2^a 1^b) or (4 2^a 1^b), unconjugated.
[[nodiscard]] StatValues stat_pair(const SupportedShape& mu, const Tableau& T);
[[nodiscard]] TypeSequence full_type(const SupportedShape& mu, const Tableau& T);
/// sum over standard T of q^b t^a s_shape(T); conjugate shapes go through omega and q<->t.
[[nodiscard]] SchurExpansion stat_genfun(const Partition& mu);
/// The same sum restricted to T whose head lies in the group of S, with q^(b - gamma).
[[nodiscard]] SchurExpansion stat_component(const SupportedShape& mu, const HeadGroup& group);

enum class PairClass { stable, unstable, immaterial };
[[nodiscard]] std::string to_string(PairClass c);
[[nodiscard]] PairClass classify_pair(int n, int m, const Tableau& T, const Partition& rho);
/// Partner of an unstable pair. Throws DomainError for stable or immaterial input.
[[nodiscard]] std::pair<Tableau, Partition> pair_involution(int n, int m, const Tableau& T, const Partition& rho);

struct UnimodalClass {
    TypeSequence type;
    std::vector<long> counts; // counts[i] = number of T in the class with a_mu(T) = i
    bool unimodal = true;
};
[[nodiscard]] bool is_unimodal(const std::vector<long>& seq);
/// Classes ordered by head, then by block sequence.
[[nodiscard]] std::vector<UnimodalClass> unimodal_profile(const SupportedShape& mu);

} // namespace qtk
