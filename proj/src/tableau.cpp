#include "qtk/tableau.hpp"

#include "qtk/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

namespace qtk {

namespace {

int parse_positive(std::string_view token, std::string_view whole)
{
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || value <= 0)
        throw ParseError("invalid label in \"" + std::string(whole) + "\"");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto at = text.find(sep, pos);
        out.push_back(text.substr(pos, at == std::string_view::npos ? std::string_view::npos : at - pos));
        if (at == std::string_view::npos) break;
        pos = at + 1;
    }
    return out;
}

} // namespace

std::string word_to_string(const Word& w)
{
    const bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 1 && x <= 9; });
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i) out << ",";
        out << w[i];
    }
    return out.str();
}

Word parse_word(std::string_view text)
{
    Word w;
    if (text.empty()) return w;
    if (text.find(',') != std::string_view::npos) {
        for (auto tok : split(text, ',')) w.push_back(parse_positive(tok, text));
        return w;
    }
    for (char ch : text) {
        if (ch < '1' || ch > '9') throw ParseError("invalid word \"" + std::string(text) + "\"");
        w.push_back(ch - '0');
    }
    return w;
}

std::vector<int> content(const Word& w)
{
    std::vector<int> c;
    for (int x : w) {
        if (x < 1) throw DomainError("word letters must be positive");
        if (static_cast<std::size_t>(x) > c.size()) c.resize(static_cast<std::size_t>(x), 0);
        ++c[static_cast<std::size_t>(x - 1)];
    }
    return c;
}

bool has_partition_content(const Word& w)
{
    const auto c = content(w);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) return false;
        if (i && c[i] > c[i - 1]) return false;
    }
    return true;
}

bool is_standard(const Word& w)
{
    const auto c = content(w);
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 1; });
}

Tableau::Tableau(Rows rows) : rows_(std::move(rows))
{
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw DomainError("tableau rows must be nonempty");
        if (r && row.size() > rows_[r - 1].size()) throw DomainError("tableau shape is not a partition");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) throw DomainError("tableau labels must be positive");
            if (c && row[c] < row[c - 1]) throw DomainError("tableau rows must weakly increase");
            if (r && row[c] <= rows_[r - 1][c]) throw DomainError("tableau columns must strictly increase");
        }
    }
}

Tableau Tableau::unchecked(Rows rows)
{
    Tableau T;
    T.rows_ = std::move(rows);
    while (!T.rows_.empty() && T.rows_.back().empty()) T.rows_.pop_back();
    return T;
}

Tableau Tableau::parse(std::string_view text)
{
    Rows rows;
    if (text.empty()) return Tableau{};
    for (auto rowtext : split(text, '/')) {
        std::vector<int> row;
        for (auto tok : split(rowtext, ',')) row.push_back(parse_positive(tok, text));
        rows.push_back(std::move(row));
    }
    try {
        return Tableau(std::move(rows));
    } catch (const DomainError& e) {
        throw ParseError(std::string(e.what()) + ": \"" + std::string(text) + "\"");
    }
}

Partition Tableau::shape() const
{
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int Tableau::size() const noexcept
{
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

bool Tableau::is_standard() const { return qtk::is_standard(reading_word(*this)); }

int Tableau::at(Cell c) const
{
    if (c.row < 1 || c.row > static_cast<int>(rows_.size()) || c.col < 1 ||
        c.col > static_cast<int>(rows_[static_cast<std::size_t>(c.row - 1)].size()))
        throw DomainError("cell outside tableau");
    return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
}

Cell Tableau::find(int label) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r][c] == label) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    throw DomainError("label " + std::to_string(label) + " not in tableau");
}

std::vector<int> Tableau::column(int c) const
{
    std::vector<int> out;
    for (const auto& r : rows_) {
        if (static_cast<int>(r.size()) < c) break;
        out.push_back(r[static_cast<std::size_t>(c - 1)]);
    }
    return out;
}

std::string Tableau::to_string() const
{
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out << "/";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) out << (c ? "," : "") << rows_[r][c];
    }
    return out.str();
}

Word reading_word(const Tableau& T)
{
    Word w;
    for (auto it = T.rows().rbegin(); it != T.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::vector<Word> standard_subwords(const Word& w)
{
    if (!has_partition_content(w)) throw DomainError("standard_subwords: content is not a partition");
    const int n = static_cast<int>(w.size());
    std::vector<bool> used(w.size(), false);
    int left = n;
    std::vector<Word> out;
    while (left > 0) {
        int top = 0;
        for (int i = 0; i < n; ++i)
            if (!used[static_cast<std::size_t>(i)]) top = std::max(top, w[static_cast<std::size_t>(i)]);
        std::vector<int> picked;
        int pos = n; // scanning starts just past the right end
        for (int letter = 1; letter <= top; ++letter) {
            int p = pos;
            for (int step = 0; step < n; ++step) {
                p = (p - 1 + n) % n;
                if (!used[static_cast<std::size_t>(p)] && w[static_cast<std::size_t>(p)] == letter) break;
            }
            used[static_cast<std::size_t>(p)] = true;
            picked.push_back(p);
            pos = p;
        }
        std::sort(picked.begin(), picked.end());
        Word sub;
        for (int p : picked) sub.push_back(w[static_cast<std::size_t>(p)]);
        out.push_back(std::move(sub));
        left -= top;
    }
    return out;
}

namespace {

int standard_charge(const Word& w)
{
    std::vector<int> pos(w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) pos[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
    int index = 0, total = 0;
    for (std::size_t i = 2; i <= w.size(); ++i) {
        if (pos[i] > pos[i - 1]) ++index;
        total += index;
    }
    return total;
}

} // namespace

int charge(const Word& w)
{
    if (is_standard(w)) return standard_charge(w);
    int total = 0;
    for (const auto& sub : standard_subwords(w)) total += standard_charge(sub);
    return total;
}

int charge(const Tableau& T) { return charge(reading_word(T)); }

Tableau row_insert(const Tableau& T, int x)
{
    auto rows = T.rows();
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            break;
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            break;
        }
        std::swap(*it, x);
    }
    return Tableau::unchecked(std::move(rows));
}

Tableau column_insert(const Tableau& T, int x)
{
    auto rows = T.rows();
    for (std::size_t c = 0;; ++c) {
        // Column c, bottom to top, as row indices.
        std::size_t height = 0;
        while (height < rows.size() && rows[height].size() > c) ++height;
        std::size_t r = 0;
        while (r < height && rows[r][c] < x) ++r;
        if (r == height) {
            if (height == rows.size()) rows.push_back({});
            rows[height].push_back(x);
            break;
        }
        std::swap(rows[r][c], x);
    }
    return Tableau::unchecked(std::move(rows));
}

namespace {

void require_corner(const Tableau& T, Cell corner)
{
    const auto& rows = T.rows();
    const int r = corner.row, c = corner.col;
    const bool ok = r >= 1 && r <= static_cast<int>(rows.size()) &&
                    static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) == c &&
                    (r == static_cast<int>(rows.size()) || static_cast<int>(rows[static_cast<std::size_t>(r)].size()) < c);
    if (!ok) throw DomainError("cell is not a removable corner");
}

} // namespace

std::pair<Tableau, int> reverse_row_insert(const Tableau& T, Cell corner)
{
    require_corner(T, corner);
    auto rows = T.rows();
    int y = rows[static_cast<std::size_t>(corner.row - 1)].back();
    rows[static_cast<std::size_t>(corner.row - 1)].pop_back();
    for (int r = corner.row - 2; r >= 0; --r) {
        auto& row = rows[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), y);
        --it; // rightmost entry strictly below y
        std::swap(*it, y);
    }
    return {Tableau::unchecked(std::move(rows)), y};
}

std::pair<Tableau, int> reverse_column_insert(const Tableau& T, Cell corner)
{
    require_corner(T, corner);
    auto rows = T.rows();
    int y = rows[static_cast<std::size_t>(corner.row - 1)].back();
    rows[static_cast<std::size_t>(corner.row - 1)].pop_back();
    for (int c = corner.col - 2; c >= 0; --c) {
        const auto cc = static_cast<std::size_t>(c);
        std::size_t r = 0;
        while (r < rows.size() && rows[r].size() > cc && rows[r][cc] <= y) ++r;
        --r; // highest entry not exceeding y
        std::swap(rows[r][cc], y);
    }
    return {Tableau::unchecked(std::move(rows)), y};
}

Tableau rectify(const Word& w)
{
    Tableau T;
    for (int x : w) T = row_insert(T, x);
    return T;
}

Tableau transpose(const Tableau& T)
{
    Tableau::Rows rows;
    const int width = T.empty() ? 0 : static_cast<int>(T.rows()[0].size());
    for (int c = 1; c <= width; ++c) rows.push_back(T.column(c));
    return Tableau(std::move(rows));
}

Tableau conjugate_tableau(const Tableau& T)
{
    if (!T.is_standard()) throw DomainError("conjugate_tableau requires a standard tableau");
    Word w = reading_word(T);
    std::reverse(w.begin(), w.end());
    return rectify(w);
}

Tableau shift_labels(const Tableau& T, int k)
{
    auto rows = T.rows();
    for (auto& r : rows)
        for (auto& x : r) {
            x += k;
            if (x < 1) throw DomainError("shift_labels: labels must stay positive");
        }
    return Tableau::unchecked(std::move(rows));
}

Word shift_letters(const Word& w, int k)
{
    Word out = w;
    for (auto& x : out) {
        x += k;
        if (x < 1) throw DomainError("shift_letters: letters must stay positive");
    }
    return out;
}

std::vector<Word> knuth_neighbours(const Word& w)
{
    std::vector<Word> out;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        const int a = w[i], b = w[i + 1], c = w[i + 2];
        // x z y <-> z x y with x <= y < z
        if ((a <= c && c < b) || (b <= c && c < a)) {
            Word v = w;
            std::swap(v[i], v[i + 1]);
            out.push_back(std::move(v));
        }
        // y z x <-> y x z with x < y <= z
        if ((c < a && a <= b) || (b < a && a <= c)) {
            Word v = w;
            std::swap(v[i + 1], v[i + 2]);
            out.push_back(std::move(v));
        }
    }
    return out;
}

bool knuth_equivalent(const Word& u, const Word& v) { return rectify(u) == rectify(v); }

std::vector<Tableau> enumerate_syt(const Partition& shape)
{
    std::vector<Tableau> out;
    const int n = shape.size();
    Tableau::Rows rows;
    std::function<void(int)> rec = [&](int label) {
        if (label > n) {
            out.push_back(Tableau::unchecked(rows));
            return;
        }
        const int len = static_cast<int>(rows.size());
        for (int r = 0; r <= len; ++r) {
            const int cur = r < len ? static_cast<int>(rows[static_cast<std::size_t>(r)].size()) : 0;
            if (cur >= shape.row(r + 1)) continue;
            if (r > 0 && cur >= static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size())) continue;
            if (r == len) rows.push_back({});
            rows[static_cast<std::size_t>(r)].push_back(label);
            rec(label + 1);
            rows[static_cast<std::size_t>(r)].pop_back();
            if (rows[static_cast<std::size_t>(r)].empty()) rows.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<Tableau> enumerate_syt(int n)
{
    std::vector<Tableau> out;
    for (const auto& shape : partitions_of(n)) {
        auto part = enumerate_syt(shape);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Tableau> enumerate_cst(const Partition& mu)
{
    // Each letter i occupies a horizontal strip of size mu_i on top of the previous shape.
    std::vector<Tableau> out;
    std::function<void(const Tableau&, int)> rec = [&](const Tableau& T, int letter) {
        if (letter > mu.length()) {
            out.push_back(T);
            return;
        }
        const Partition inner = T.shape();
        for (const auto& outer : strip_extensions(inner, mu.row(letter), Strip::horizontal)) {
            auto rows = T.rows();
            rows.resize(static_cast<std::size_t>(outer.length()));
            for (const auto& cell : skew_cells(outer, inner)) rows[static_cast<std::size_t>(cell.row - 1)].push_back(letter);
            rec(Tableau::unchecked(std::move(rows)), letter + 1);
        }
    };
    rec(Tableau{}, 1);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        const auto sa = a.shape(), sb = b.shape();
        if (sa != sb) return PartitionOrder{}(sa, sb);
        return a.rows() < b.rows();
    });
    return out;
}

std::vector<Tableau> enumerate_cst(const Partition& shape, const Partition& mu)
{
    std::vector<Tableau> out;
    if (shape.size() != mu.size() || !dominance_leq(mu, shape)) return out;
    for (auto& T : enumerate_cst(mu))
        if (T.shape() == shape) out.push_back(std::move(T));
    return out;
}

} // namespace qtk
