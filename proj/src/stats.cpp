#include "qtk/stats.hpp"

#include "qtk/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qtk {

namespace {

void require_block_input(const char* who, int m, const Partition& rho, const Tableau& T, Strip kind)
{
    if (m < 1) throw DomainError(std::string(who) + ": m must be positive");
    if (!T.is_standard()) throw DomainError(std::string(who) + ": T must be standard");
    const Partition lambda = T.shape();
    if (rho.size() != 2 * T.size() + m)
        throw DomainError(std::string(who) + ": rho must have size 2|T|+m");
    if (!contains(rho, lambda) || !is_strip(rho, lambda, kind))
        throw DomainError(std::string(who) + ": rho/lambda(T) is not a strip of the right kind");
}

// Cells of outer/inner sorted so each is a corner when removed in turn.
std::vector<Cell> right_to_left(const Partition& outer, const Partition& inner)
{
    auto cells = skew_cells(outer, inner);
    std::sort(cells.begin(), cells.end(), [](Cell x, Cell y) { return x.col > y.col; });
    return cells;
}

std::vector<Cell> top_to_bottom(const Partition& outer, const Partition& inner)
{
    auto cells = skew_cells(outer, inner);
    std::sort(cells.begin(), cells.end(), [](Cell x, Cell y) { return x.row > y.row; });
    return cells;
}

// Pull labels 1..m out of the ejected letters and lower the rest; throws if any is missing.
std::vector<int> split_prefix(const char* who, std::vector<int> ejected, int m)
{
    std::sort(ejected.begin(), ejected.end());
    for (int i = 1; i <= m; ++i)
        if (static_cast<int>(ejected.size()) < i || ejected[static_cast<std::size_t>(i - 1)] != i)
            throw DomainError(std::string(who) + ": evacuated letters do not contain 1..m");
    std::vector<int> rest;
    for (auto it = ejected.begin() + m; it != ejected.end(); ++it) rest.push_back(*it - m);
    return rest;
}

} // namespace

Tableau add_row_block(int m, const Partition& rho, const Tableau& T)
{
    require_block_input("add_row_block", m, rho, T, Strip::horizontal);
    Tableau rest = T;
    std::vector<int> R;
    for (Cell c : right_to_left(T.shape(), remove_first_row(rho))) {
        auto [next, y] = reverse_column_insert(rest, c);
        rest = std::move(next);
        R.push_back(y);
    }
    std::sort(R.begin(), R.end());
    Tableau out = shift_labels(rest, m);
    for (int i = 1; i <= m; ++i) out = row_insert(out, i);
    for (int y : R) out = row_insert(out, y + m);
    return out;
}

Tableau remove_row_block(int m, const Partition& rho, const Tableau& built)
{
    if (m < 1) throw DomainError("remove_row_block: m must be positive");
    const Partition core = remove_first_row(rho);
    const Partition shape = built.shape();
    if (!contains(shape, core) || !is_strip(shape, core, Strip::horizontal))
        throw DomainError("remove_row_block: tableau does not fit rho");
    Tableau rest = built;
    std::vector<int> ejected;
    for (Cell c : right_to_left(shape, core)) {
        auto [next, y] = reverse_row_insert(rest, c);
        rest = std::move(next);
        ejected.push_back(y);
    }
    auto R = split_prefix("remove_row_block", std::move(ejected), m);
    Tableau out = shift_labels(rest, -m);
    for (auto it = R.rbegin(); it != R.rend(); ++it) out = column_insert(out, *it);
    return out;
}

Tableau add_col_block(int m, const Partition& rho, const Tableau& T)
{
    require_block_input("add_col_block", m, rho, T, Strip::vertical);
    Tableau rest = T;
    std::vector<int> C;
    for (Cell c : top_to_bottom(T.shape(), remove_first_column(rho))) {
        auto [next, y] = reverse_row_insert(rest, c);
        rest = std::move(next);
        C.push_back(y);
    }
    std::sort(C.begin(), C.end());
    Tableau out = shift_labels(rest, m);
    for (int i = 1; i <= m; ++i) out = column_insert(out, i);
    for (int y : C) out = column_insert(out, y + m);
    return out;
}

Tableau remove_col_block(int m, const Partition& rho, const Tableau& built)
{
    if (m < 1) throw DomainError("remove_col_block: m must be positive");
    const Partition core = remove_first_column(rho);
    const Partition shape = built.shape();
    if (!contains(shape, core) || !is_strip(shape, core, Strip::vertical))
        throw DomainError("remove_col_block: tableau does not fit rho");
    Tableau rest = built;
    std::vector<int> ejected;
    for (Cell c : top_to_bottom(shape, core)) {
        auto [next, y] = reverse_column_insert(rest, c);
        rest = std::move(next);
        ejected.push_back(y);
    }
    auto C = split_prefix("remove_col_block", std::move(ejected), m);
    Tableau out = shift_labels(rest, -m);
    for (auto it = C.rbegin(); it != C.rend(); ++it) out = row_insert(out, *it);
    return out;
}

Tableau unbuild(int m, const Tableau& T)
{
    if (m < 2) throw DomainError("unbuild: m must be at least 2");
    if (!T.is_standard()) throw DomainError("unbuild: T must be standard");
    const auto& rows = T.rows();
    auto starts_with_prefix = [m](const std::vector<int>& line) {
        if (static_cast<int>(line.size()) < m) return false;
        for (int i = 0; i < m; ++i)
            if (line[static_cast<std::size_t>(i)] != i + 1) return false;
        return true;
    };
    if (!rows.empty() && starts_with_prefix(rows[0])) {
        Tableau rest = Tableau::unchecked(Tableau::Rows(rows.begin() + 1, rows.end()));
        const auto& first = rows[0];
        for (auto it = first.rbegin(); it != first.rend() - m; ++it) rest = column_insert(rest, *it);
        return shift_labels(rest, -m);
    }
    const auto col = T.column(1);
    if (starts_with_prefix(col)) {
        Tableau::Rows trimmed;
        for (const auto& r : rows) trimmed.emplace_back(r.begin() + 1, r.end());
        Tableau rest = Tableau::unchecked(std::move(trimmed));
        for (auto it = col.rbegin(); it != col.rend() - m; ++it) rest = row_insert(rest, *it);
        return shift_labels(rest, -m);
    }
    throw DomainError("unbuild: neither the row nor the column 1.." + std::to_string(m) + " is present");
}

Tableau delete_prefix(int h, const Tableau& T)
{
    if (h < 0 || h > T.size()) throw DomainError("delete_prefix: h out of range");
    if (!T.is_standard()) throw DomainError("delete_prefix: T must be standard");
    if (h == 0) return T;
    Word w;
    for (int x : reading_word(T))
        if (x > h) w.push_back(x - h);
    return rectify(w);
}

std::string TypeSequence::to_string() const
{
    std::string out;
    if (head) out = "(" + head->to_string() + ")|";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += ',';
        out += blocks[i] == Block::H ? 'H' : blocks[i] == Block::V ? 'V' : 'S';
    }
    return out;
}

TypeSequence TypeSequence::parse(std::string_view text)
{
    TypeSequence out;
    if (!text.empty() && text.front() == '(') {
        const auto close = text.find(")|");
        if (close == std::string_view::npos) throw ParseError("type sequence: expected ')|' after the head");
        out.head = Tableau::parse(text.substr(1, close - 1));
        text.remove_prefix(close + 2);
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == 'H') out.blocks.push_back(Block::H);
        else if (c == 'V') out.blocks.push_back(Block::V);
        else if (c == 'S') out.blocks.push_back(Block::S);
        else throw ParseError(std::string("type sequence: unexpected '") + c + "'");
        ++pos;
        if (pos < text.size()) {
            if (text[pos] != ',') throw ParseError("type sequence: expected ','");
            if (++pos == text.size()) throw ParseError("type sequence: trailing ','");
        }
    }
    return out;
}

TypeSequence type_two_col(const Tableau& T, int a)
{
    if (!T.is_standard()) throw DomainError("type_two_col: T must be standard");
    if (a < 0 || 2 * a > T.size()) throw DomainError("type_two_col: too many dominoes for |T|");
    TypeSequence out;
    Tableau cur = T;
    for (int i = 0; i < a; ++i) {
        const Cell two = cur.find(2);
        if (two == Cell{1, 2}) out.blocks.push_back(Block::H);
        else if (two == Cell{2, 1}) out.blocks.push_back(Block::V);
        else throw DomainError("type_two_col: 2 is neither right of nor above 1");
        cur = unbuild(2, cur);
    }
    out.blocks.insert(out.blocks.end(), static_cast<std::size_t>(cur.size()), Block::S);
    return out;
}

std::string theta_name(Theta th)
{
    switch (th) {
    case Theta::Hti4: return "Hti4";
    case Theta::Hti3_K1: return "Hti3 K1";
    case Theta::Hti2_K2: return "Hti2 K2";
    case Theta::Hti3: return "Hti3";
    case Theta::Hti2_K1: return "Hti2 K1";
    }
    return "?";
}

Tableau apply_theta(Theta th, const Tableau& T)
{
    switch (th) {
    case Theta::Hti4: return unbuild(4, T);
    case Theta::Hti3_K1: return unbuild(3, delete_prefix(1, T));
    case Theta::Hti2_K2: return unbuild(2, delete_prefix(2, T));
    case Theta::Hti3: return unbuild(3, T);
    case Theta::Hti2_K1: return unbuild(2, delete_prefix(1, T));
    }
    throw DomainError("apply_theta: unknown operator");
}

const std::vector<StatEntry>& stat_table(int m)
{
    auto P = [](const char* s) { return Tableau::parse(s); };
    // Size 3: alpha for the two mixed heads follows the proved formulas, not the printed table.
    static const std::vector<StatEntry> three = {
        {P("1,2,3"), 3, 2, Theta::Hti3, 0},
        {P("1,3/2"), 1, 1, Theta::Hti2_K1, 1},
        {P("1,2/3"), 2, 1, Theta::Hti2_K1, 2},
        {P("1/2/3"), 0, 0, Theta::Hti3, 3},
    };
    static const std::vector<StatEntry> four = {
        {P("1,2,3,4"), 6, 3, Theta::Hti4, 0},    {P("1,3,4/2"), 3, 2, Theta::Hti3_K1, 1},
        {P("1,2,4/3"), 4, 2, Theta::Hti2_K2, 2}, {P("1,2,3/4"), 5, 2, Theta::Hti2_K2, 3},
        {P("1,2/3,4"), 4, 2, Theta::Hti2_K2, 2}, {P("1,3/2,4"), 2, 1, Theta::Hti2_K2, 4},
        {P("1,4/2/3"), 1, 1, Theta::Hti2_K2, 3}, {P("1,3/2/4"), 2, 1, Theta::Hti2_K2, 4},
        {P("1,2/3/4"), 3, 1, Theta::Hti3_K1, 5}, {P("1/2/3/4"), 0, 0, Theta::Hti4, 6},
    };
    if (m == 3) return three;
    if (m == 4) return four;
    throw DomainError("stat_table: heads have size 3 or 4");
}

const StatEntry& stat_entry(const Tableau& S)
{
    if (S.size() == 3 || S.size() == 4)
        for (const auto& e : stat_table(S.size()))
            if (e.head == S) return e;
    throw DomainError("stat_entry: " + S.to_string() + " is not a standard head of size 3 or 4");
}

Tableau head_of(const Tableau& T, int m)
{
    if (m < 0 || m > T.size()) throw DomainError("head_of: m out of range");
    Tableau::Rows rows;
    for (const auto& r : T.rows()) {
        std::vector<int> kept;
        for (int x : r)
            if (x <= m) kept.push_back(x);
        rows.push_back(std::move(kept));
    }
    return Tableau::unchecked(std::move(rows));
}

namespace {

void require_stat_shape(const SupportedShape& mu, const Tableau& T, const char* who)
{
    if (mu.conjugated) throw DomainError(std::string(who) + ": statistics are defined for unconjugated shapes");
    if (T.size() != mu.base().size()) throw DomainError(std::string(who) + ": |T| differs from |mu|");
    if (!T.is_standard()) throw DomainError(std::string(who) + ": T must be standard");
}

StatValues two_column_stats(const Tableau& T, int a, int charge_value)
{
    const int n = T.size();
    StatValues s{charge_value, 0};
    const auto type = type_two_col(T, a);
    for (int i = 1; i <= a; ++i) {
        if (type.blocks[static_cast<std::size_t>(i - 1)] == Block::H) s.a -= (n + 1) - 2 * i;
        else ++s.b;
    }
    return s;
}

} // namespace

StatValues stat_pair(const SupportedShape& mu, const Tableau& T)
{
    require_stat_shape(mu, T, "stat_pair");
    if (mu.family == ShapeFamily::two_column) return two_column_stats(T, mu.a, charge(T));
    const int m = mu.head();
    const auto& e = stat_entry(head_of(T, m));
    const Tableau rest = apply_theta(e.theta, T);
    const int np = 2 * mu.a + mu.b;
    const auto inner = two_column_stats(rest, mu.a, 0);
    return {charge(T) - e.alpha - e.beta * np + inner.a, inner.b + e.gamma};
}

TypeSequence full_type(const SupportedShape& mu, const Tableau& T)
{
    require_stat_shape(mu, T, "full_type");
    if (mu.family == ShapeFamily::two_column) return type_two_col(T, mu.a);
    const Tableau S = head_of(T, mu.head());
    auto out = type_two_col(apply_theta(stat_entry(S).theta, T), mu.a);
    out.head = S;
    return out;
}

SchurExpansion stat_genfun(const Partition& mu)
{
    const auto shape = require_supported(mu);
    if (shape.conjugated) {
        SupportedShape base = shape;
        base.conjugated = false;
        return omega(swap_qt(stat_genfun(base.partition())));
    }
    SchurExpansion out;
    for (const auto& T : enumerate_syt(mu.size())) {
        const auto s = stat_pair(shape, T);
        out.add(T.shape(), QTPoly::monomial(s.b, s.a));
    }
    return out;
}

SchurExpansion stat_component(const SupportedShape& mu, const HeadGroup& group)
{
    if (mu.family == ShapeFamily::two_column || mu.conjugated)
        throw DomainError("stat_component: mu must be (3 2^a 1^b) or (4 2^a 1^b)");
    SchurExpansion out;
    for (const auto& T : enumerate_syt(mu.base().size())) {
        const Tableau S = head_of(T, mu.head());
        if (std::find(group.heads.begin(), group.heads.end(), S) == group.heads.end()) continue;
        const auto s = stat_pair(mu, T);
        out.add(T.shape(), QTPoly::monomial(s.b - group.gamma, s.a));
    }
    return out;
}

std::string to_string(PairClass c)
{
    switch (c) {
    case PairClass::stable: return "stable";
    case PairClass::unstable: return "unstable";
    case PairClass::immaterial: return "immaterial";
    }
    return "?";
}

PairClass classify_pair(int n, int m, const Tableau& T, const Partition& rho)
{
    if (T.size() != n) throw DomainError("classify_pair: |T| must equal n");
    const Tableau built = add_row_block(m, rho, T);
    if (n == 0 || !drop_snake(rho, n)) return PairClass::immaterial;
    return unbuild(m, built) == T ? PairClass::stable : PairClass::unstable;
}

std::pair<Tableau, Partition> pair_involution(int n, int m, const Tableau& T, const Partition& rho)
{
    const auto cls = classify_pair(n, m, T, rho);
    if (cls != PairClass::unstable)
        throw DomainError("pair_involution: the pair is " + to_string(cls) + ", not unstable");
    const Tableau built = add_row_block(m, rho, T);
    Partition partner = snake_involution(built.shape(), n, rho);
    Tableau hat = remove_row_block(m, partner, built);
    return {std::move(hat), std::move(partner)};
}

bool is_unimodal(const std::vector<long>& seq)
{
    std::size_t i = 1;
    while (i < seq.size() && seq[i] >= seq[i - 1]) ++i;
    while (i < seq.size() && seq[i] <= seq[i - 1]) ++i;
    return i >= seq.size();
}

std::vector<UnimodalClass> unimodal_profile(const SupportedShape& mu)
{
    if (mu.conjugated) throw DomainError("unimodal_profile: mu must be unconjugated");
    // Key: head position in the table, then the block sequence.
    std::map<std::pair<int, std::vector<Block>>, UnimodalClass> classes;
    for (const auto& T : enumerate_syt(mu.base().size())) {
        auto type = full_type(mu, T);
        int head_index = -1;
        if (type.head) {
            const auto& table = stat_table(mu.head());
            head_index = static_cast<int>(
                std::find_if(table.begin(), table.end(), [&](const StatEntry& e) { return e.head == *type.head; }) -
                table.begin());
        }
        const int a = stat_pair(mu, T).a;
        if (a < 0) throw DomainError("unimodal_profile: negative statistic for " + T.to_string());
        auto& cls = classes[{head_index, type.blocks}];
        if (cls.counts.empty()) cls.type = std::move(type);
        if (static_cast<int>(cls.counts.size()) <= a) cls.counts.resize(static_cast<std::size_t>(a) + 1, 0);
        ++cls.counts[static_cast<std::size_t>(a)];
    }
    std::vector<UnimodalClass> out;
    for (auto& [key, cls] : classes) {
        cls.unimodal = is_unimodal(cls.counts);
        out.push_back(std::move(cls));
    }
    return out;
}

} // namespace qtk
