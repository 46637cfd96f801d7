#pragma once

#include "qtk/partition.hpp"
#include "qtk/qtpoly.hpp"

#include <functional>
#include <map>
#include <optional>

namespace qtk {

/// Finite linear combination of basis elements indexed by partitions, with
/// QTPoly coefficients. The tag keeps Schur and Hall-Littlewood coordinates apart.
template <class Tag>
class Expansion {
public:
    using Terms = std::map<Partition, QTPoly, PartitionOrder>;

    Expansion() = default;
    static Expansion basis(const Partition& lambda, const QTPoly& c = 1)
    {
        Expansion e;
        e.add(lambda, c);
        return e;
    }

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] QTPoly coeff(const Partition& lambda) const
    {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? QTPoly{} : it->second;
    }

    void add(const Partition& lambda, const QTPoly& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(lambda, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Degree when every index has the same size; the zero expansion has none.
    [[nodiscard]] std::optional<int> degree() const
    {
        if (terms_.empty()) return std::nullopt;
        const int d = terms_.begin()->first.size();
        for (const auto& [lambda, c] : terms_)
            if (lambda.size() != d) return std::nullopt;
        return d;
    }
    [[nodiscard]] bool is_homogeneous() const { return terms_.empty() || degree().has_value(); }

    Expansion& operator+=(const Expansion& o)
    {
        for (const auto& [lambda, c] : o.terms_) add(lambda, c);
        return *this;
    }
    Expansion& operator-=(const Expansion& o)
    {
        for (const auto& [lambda, c] : o.terms_) add(lambda, -c);
        return *this;
    }
    friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
    friend Expansion operator-(Expansion a, const Expansion& b) { return a -= b; }
    friend Expansion operator-(const Expansion& a) { return a.scaled(QTPoly(-1)); }
    friend Expansion operator*(const QTPoly& c, const Expansion& a) { return a.scaled(c); }
    friend bool operator==(const Expansion&, const Expansion&) = default;

    [[nodiscard]] Expansion scaled(const QTPoly& c) const
    {
        Expansion out;
        if (c.is_zero()) return out;
        for (const auto& [lambda, v] : terms_) out.add(lambda, v * c);
        return out;
    }

    /// Apply a coefficient map termwise, dropping terms that become zero.
    template <class F>
    [[nodiscard]] Expansion map_coeffs(F&& f) const
    {
        Expansion out;
        for (const auto& [lambda, v] : terms_) out.add(lambda, f(v));
        return out;
    }

private:
    Terms terms_;
};

struct SchurTag {};
struct HallLittlewoodTag {};
using SchurExpansion = Expansion<SchurTag>;
/// Coordinates in the basis H_nu[X;t].
using HLExpansion = Expansion<HallLittlewoodTag>;

using LinearOperator = std::function<SchurExpansion(const SchurExpansion&)>;

/// The constant 1 = s_().
[[nodiscard]] SchurExpansion one();
[[nodiscard]] SchurExpansion schur(const Partition& lambda);

/// Extend a map on basis elements linearly.
[[nodiscard]] SchurExpansion apply_linear(const SchurExpansion& f,
                                          const std::function<SchurExpansion(const Partition&)>& on_basis);

[[nodiscard]] SchurExpansion mul_h(int k, const SchurExpansion& f);
[[nodiscard]] SchurExpansion mul_e(int k, const SchurExpansion& f);
[[nodiscard]] SchurExpansion skew_h(int k, const SchurExpansion& f);
[[nodiscard]] SchurExpansion skew_e(int k, const SchurExpansion& f);

/// S_m = sum_k (-1)^k h_{m+k} e_k^perp.
[[nodiscard]] SchurExpansion bernstein_S(int m, const SchurExpansion& f);
/// H_m^t = sum_k t^k S_{m+k} h_k^perp.
[[nodiscard]] SchurExpansion hl_vertex_H(int m, const SchurExpansion& f);
/// H_m^t through the snake rule with a fixed k for every term; k < 0 picks
/// max(0, lambda_1 - m) per term. Throws when m + k < lambda_1 for some term.
[[nodiscard]] SchurExpansion hl_vertex_H_snake(int m, int k, const SchurExpansion& f);
/// bar-H_m^t = sum_{i,j} t^{n-j} (-1)^i e_{m+i+j} h_i^perp e_j^perp on degree n.
[[nodiscard]] SchurExpansion hl_vertex_Hbar(int m, const SchurExpansion& f);

[[nodiscard]] SchurExpansion omega(const SchurExpansion& f);
/// Multiply a homogeneous expansion by t^degree.
[[nodiscard]] SchurExpansion grade_Rt(const SchurExpansion& f);
/// Exchange q and t in every coefficient.
[[nodiscard]] SchurExpansion swap_qt(const SchurExpansion& f);

/// Standard pairing with the Schur functions orthonormal.
[[nodiscard]] QTPoly hall_pairing(const SchurExpansion& f, const SchurExpansion& g);

/// Throws DomainError unless f is homogeneous; returns its degree (0 for zero input).
int require_homogeneous(const SchurExpansion& f, const char* who);

} // namespace qtk
