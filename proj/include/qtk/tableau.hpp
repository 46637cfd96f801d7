#pragma once

#include "qtk/partition.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtk {

using Word = std::vector<int>;

/// Digits when every letter is at most 9, otherwise comma-separated.
[[nodiscard]] std::string word_to_string(const Word& w);
[[nodiscard]] Word parse_word(std::string_view text);

/// Multiplicities of 1, 2, ..., max letter. Throws on letters < 1.
[[nodiscard]] std::vector<int> content(const Word& w);
[[nodiscard]] bool has_partition_content(const Word& w);
[[nodiscard]] bool is_standard(const Word& w);

/// Column-strict filling of a partition diagram; rows stored bottom first.
class Tableau {
public:
    using Rows = std::vector<std::vector<int>>;

    Tableau() = default;
    /// Validates shape, weak row increase and strict column increase.
    explicit Tableau(Rows rows);
    /// For internal algorithms whose output is column strict by construction.
    static Tableau unchecked(Rows rows);

    /// "1,3,5,6/2,4": rows bottom to top; "" is the empty tableau.
    static Tableau parse(std::string_view text);

    [[nodiscard]] const Rows& rows() const noexcept { return rows_; }
    [[nodiscard]] Partition shape() const;
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return rows_.empty(); }
    [[nodiscard]] bool is_standard() const;
    /// Entry at a 1-based cell.
    [[nodiscard]] int at(Cell c) const;
    /// Cell holding a label in a standard tableau; throws if absent.
    [[nodiscard]] Cell find(int label) const;
    /// Column c (1-based), bottom to top.
    [[nodiscard]] std::vector<int> column(int c) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    Rows rows_;
};

[[nodiscard]] Word reading_word(const Tableau& T);
[[nodiscard]] std::vector<Word> standard_subwords(const Word& w);
[[nodiscard]] int charge(const Word& w);
[[nodiscard]] int charge(const Tableau& T);

[[nodiscard]] Tableau row_insert(const Tableau& T, int x);
[[nodiscard]] Tableau column_insert(const Tableau& T, int x);
/// Undo a row insertion ending at the removable corner; returns the ejected letter.
[[nodiscard]] std::pair<Tableau, int> reverse_row_insert(const Tableau& T, Cell corner);
/// Undo a column insertion ending at the removable corner; returns the ejected letter.
[[nodiscard]] std::pair<Tableau, int> reverse_column_insert(const Tableau& T, Cell corner);

[[nodiscard]] Tableau rectify(const Word& w);
[[nodiscard]] Tableau transpose(const Tableau& T);
[[nodiscard]] Tableau conjugate_tableau(const Tableau& T);

/// Add k to every label (k may be negative as long as labels stay positive).
[[nodiscard]] Tableau shift_labels(const Tableau& T, int k);
[[nodiscard]] Word shift_letters(const Word& w, int k);

/// Words reachable by one elementary Knuth relation.
[[nodiscard]] std::vector<Word> knuth_neighbours(const Word& w);
/// Knuth equivalence, decided through rectification.
[[nodiscard]] bool knuth_equivalent(const Word& u, const Word& v);

[[nodiscard]] std::vector<Tableau> enumerate_syt(const Partition& shape);
/// All standard tableaux of size n, shapes in PartitionOrder.
[[nodiscard]] std::vector<Tableau> enumerate_syt(int n);
/// All column-strict tableaux of the given content, built as a chain of horizontal strips.
[[nodiscard]] std::vector<Tableau> enumerate_cst(const Partition& content);
[[nodiscard]] std::vector<Tableau> enumerate_cst(const Partition& shape, const Partition& content);

} // namespace qtk
