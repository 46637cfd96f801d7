#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtk {

/// Integer partition with no trailing zeros. Rows are numbered from 1 at the
/// bottom (French notation); reading past the last part yields 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// "5,4,2,2,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// 1-based row length; 0 outside 1..length().
    [[nodiscard]] int row(int r) const noexcept
    {
        return (r >= 1 && r <= length()) ? parts_[static_cast<std::size_t>(r - 1)] : 0;
    }
    [[nodiscard]] int operator[](std::size_t i) const noexcept
    {
        return i < parts_.size() ? parts_[i] : 0;
    }

    [[nodiscard]] std::string to_string() const;   // "5,4,2,2,1"
    [[nodiscard]] std::string pretty() const;      // "(5,4,2,2,1)"

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the part sequences.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// The fixed total order used for iteration and serialization: smaller size
/// first, then reverse-lexicographic, so (3) precedes (2,1) precedes (1,1,1).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const noexcept
    {
        if (a.size() != b.size()) return a.size() < b.size();
        return a > b;
    }
};

struct Cell {
    int row = 1; // 1 = bottom
    int col = 1; // 1 = left
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Strip { horizontal, vertical };

[[nodiscard]] Partition conjugate(const Partition& p);
[[nodiscard]] bool contains(const Partition& p, Cell s) noexcept;
[[nodiscard]] bool contains(const Partition& outer, const Partition& inner) noexcept;

/// (arm, leg) of a cell of mu.
[[nodiscard]] std::pair<int, int> arm_leg(const Partition& mu, Cell s);

/// n(mu) = sum_i (i-1) mu_i.
[[nodiscard]] int n_stat(const Partition& mu) noexcept;

/// lambda^r: first row removed.
[[nodiscard]] Partition remove_first_row(const Partition& p);
/// lambda^c: first column removed.
[[nodiscard]] Partition remove_first_column(const Partition& p);

/// Whether outer/inner is a horizontal (resp. vertical) strip; requires inner within outer.
[[nodiscard]] bool is_strip(const Partition& outer, const Partition& inner, Strip kind);

/// All rho containing lambda with rho/lambda a k-strip of the given kind, in PartitionOrder.
[[nodiscard]] std::vector<Partition> strip_extensions(const Partition& lambda, int k, Strip kind);
/// All lambda inside mu with mu/lambda a k-strip of the given kind, in PartitionOrder.
[[nodiscard]] std::vector<Partition> strip_removals(const Partition& mu, int k, Strip kind);

/// Cells of the skew shape outer/inner, bottom row first, left to right.
[[nodiscard]] std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner);

/// Cells of the border mu/mu^{rc}, walked from (1, mu_1) leftwards and upwards along the rim.
[[nodiscard]] std::vector<Cell> border_walk(const Partition& mu);

/// ht_k(mu): distinct rows met by the first k rim cells. Requires 1 <= k <= border size.
[[nodiscard]] int snake_height(const Partition& mu, int k);

/// mu with its k-snake removed, if that leaves a partition. k = 0 returns mu itself.
[[nodiscard]] std::optional<Partition> drop_snake(const Partition& mu, int k);

/// Reattach a k-snake of height h to rho; absent unless the result is a partition whose
/// k-snake has height h and removes back to rho.
[[nodiscard]] std::optional<Partition> add_snake(const Partition& rho, int k, int h);

/// The height-flipping involution on strip extensions rho of lambda with a common
/// n-snake-removed core.
[[nodiscard]] Partition snake_involution(const Partition& lambda, int n, const Partition& rho);

/// All partitions of n in PartitionOrder: (n), ..., (1^n).
[[nodiscard]] std::vector<Partition> partitions_of(int n);
[[nodiscard]] bool dominance_leq(const Partition& lambda, const Partition& mu);
/// Partitions of n ordered so that every dominance-smaller partition comes first:
/// (1^n), ..., (n).
[[nodiscard]] std::vector<Partition> linear_extension(int n);

} // namespace qtk
