#pragma once

#include "qtk/report.hpp"
#include "qtk/schur.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace qtk {

using RationalCoeffs = std::map<Partition, QTRational, PartitionOrder>;

/// Coordinates in the power sums p_rho of one degree.
struct PowerExpansion {
    RationalCoeffs terms;
    friend bool operator==(const PowerExpansion&, const PowerExpansion&) = default;
};

/// Schur coordinates with q and t specialized.
struct NumericSchur {
    RationalCoeffs terms;
    [[nodiscard]] QTRational coeff(const Partition& lambda) const;
    void add(const Partition& lambda, const QTRational& c);
    NumericSchur& operator+=(const NumericSchur& o);
    friend NumericSchur operator+(NumericSchur a, const NumericSchur& b) { return a += b; }
    friend NumericSchur operator*(const QTRational& c, const NumericSchur& f);
    friend bool operator==(const NumericSchur&, const NumericSchur&) = default;
};

struct QTPoint {
    QTRational q;
    QTRational t;
};

[[nodiscard]] NumericSchur evaluate(const SchurExpansion& f, const QTPoint& p);

/// chi^lambda(rho) by the Murnaghan-Nakayama rule.
[[nodiscard]] long mn_character(const Partition& lambda, const Partition& rho);
/// z_rho = prod_i i^{m_i} m_i!.
[[nodiscard]] mpz_class z_rho(const Partition& rho);
[[nodiscard]] PowerExpansion schur_to_power(const Partition& lambda);
[[nodiscard]] PowerExpansion to_power(const NumericSchur& f);

/// Throw DegeneratePoint when a factor 1 - t0^k (or 1 - q0^k) vanishes.
[[nodiscard]] QTRational scalar_qt(const PowerExpansion& f, const PowerExpansion& g, const QTPoint& p);
[[nodiscard]] QTRational scalar_t(const PowerExpansion& f, const PowerExpansion& g, const QTRational& t0);

/// Integral form J_mu at a point, by Gram-Schmidt over Schur functions taken in the given
/// order (which must extend dominance, smallest first); every partition of |mu| must appear.
[[nodiscard]] NumericSchur macdonald_oracle_J(const Partition& mu, const QTPoint& p,
                                              const std::vector<Partition>& order);
[[nodiscard]] NumericSchur macdonald_oracle_J(const Partition& mu, const QTPoint& p);
/// The specialized H_mu: coefficient of s_lambda is <J_mu, s_lambda>_t.
[[nodiscard]] NumericSchur macdonald_oracle(const Partition& mu, const QTPoint& p);
[[nodiscard]] QTRational kostka_oracle(const Partition& lambda, const Partition& mu, const QTPoint& p);

/// Sum of t^charge over column-strict fillings of lambda with content mu.
[[nodiscard]] QTPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

[[nodiscard]] mpz_class count_syt_hook(const Partition& lambda);
[[nodiscard]] mpz_class count_syt_enumerated(const Partition& lambda);
/// Both counts; throws std::logic_error if they differ.
[[nodiscard]] mpz_class count_syt(const Partition& lambda);

/// Rationals u/v with 2 <= u < v <= 97, redrawn while any 1 - q^i t^j vanishes
/// (0 <= i <= max_exp, |j| <= max_exp, not both zero).
[[nodiscard]] QTPoint draw_point(std::mt19937_64& rng, int max_exp);
[[nodiscard]] std::vector<QTPoint> draw_points(std::uint64_t seed, int count, int max_exp);

/// Coefficient lemmas and the rational-coefficient expansions of H_(3 2^a 1^b) and
/// H_(4 2^a 1^b), checked at each point. Throws DegeneratePoint on a bad point.
[[nodiscard]] Report verify_rational_props(int a, int b, const std::vector<QTPoint>& points);

} // namespace qtk
