#include "qtk/partition.hpp"

#include "qtk/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace qtk {

namespace {

void sort_unique(std::vector<Partition>& v)
{
    std::sort(v.begin(), v.end(), PartitionOrder{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool is_weakly_decreasing(const std::vector<int>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

std::vector<int> trimmed(std::vector<int> v)
{
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(trimmed(std::move(parts)))
{
    for (int p : parts_)
        if (p < 0) throw DomainError("partition parts must be nonnegative");
    if (!is_weakly_decreasing(parts_)) throw DomainError("partition parts must be weakly decreasing");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || value <= 0)
            throw ParseError("invalid partition text: \"" + std::string(text) + "\"");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (!is_weakly_decreasing(parts))
        throw ParseError("partition parts must be weakly decreasing: \"" + std::string(text) + "\"");
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    return out.str();
}

std::string Partition::pretty() const { return "(" + to_string() + ")"; }

Partition conjugate(const Partition& p)
{
    std::vector<int> out(static_cast<std::size_t>(p.row(1)), 0);
    for (int r = 1; r <= p.length(); ++r)
        for (int c = 1; c <= p.row(r); ++c) ++out[static_cast<std::size_t>(c - 1)];
    return Partition(std::move(out));
}

bool contains(const Partition& p, Cell s) noexcept
{
    return s.row >= 1 && s.col >= 1 && s.col <= p.row(s.row);
}

bool contains(const Partition& outer, const Partition& inner) noexcept
{
    if (inner.length() > outer.length()) return false;
    for (int r = 1; r <= inner.length(); ++r)
        if (inner.row(r) > outer.row(r)) return false;
    return true;
}

std::pair<int, int> arm_leg(const Partition& mu, Cell s)
{
    if (!contains(mu, s)) throw DomainError("cell outside partition " + mu.pretty());
    return {mu.row(s.row) - s.col, conjugate(mu).row(s.col) - s.row};
}

int n_stat(const Partition& mu) noexcept
{
    int total = 0;
    for (int r = 1; r <= mu.length(); ++r) total += (r - 1) * mu.row(r);
    return total;
}

Partition remove_first_row(const Partition& p)
{
    if (p.empty()) return p;
    return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

Partition remove_first_column(const Partition& p)
{
    std::vector<int> out;
    for (int x : p.parts()) out.push_back(x - 1);
    return Partition(std::move(out));
}

bool is_strip(const Partition& outer, const Partition& inner, Strip kind)
{
    if (!contains(outer, inner)) return false;
    if (kind == Strip::horizontal) {
        for (int r = 1; r < outer.length(); ++r)
            if (outer.row(r + 1) > inner.row(r)) return false;
        return true;
    }
    for (int r = 1; r <= outer.length(); ++r)
        if (outer.row(r) - inner.row(r) > 1) return false;
    return true;
}

std::vector<Partition> strip_extensions(const Partition& lambda, int k, Strip kind)
{
    if (k < 0) throw DomainError("strip size must be nonnegative");
    std::vector<Partition> out;
    const int len = lambda.length();
    std::vector<int> rho;
    if (kind == Strip::horizontal) {
        // rho_1 >= lambda_1 and lambda_r <= rho_r <= lambda_{r-1} for r >= 2.
        std::function<void(int, int)> rec = [&](int r, int left) {
            if (r > len + 1) {
                if (left == 0) out.emplace_back(rho);
                return;
            }
            const int lo = lambda.row(r);
            const int hi = (r == 1) ? lo + left : std::min(lambda.row(r - 1), lo + left);
            for (int v = lo; v <= hi; ++v) {
                rho.push_back(v);
                rec(r + 1, left - (v - lo));
                rho.pop_back();
            }
        };
        rec(1, k);
    } else {
        // rho_r in {lambda_r, lambda_r + 1}; rows beyond the length start at 0.
        std::function<void(int, int)> rec = [&](int r, int left) {
            if (left == 0) {
                std::vector<int> full = rho;
                for (int s = r; s <= len; ++s) full.push_back(lambda.row(s));
                if (is_weakly_decreasing(full)) out.emplace_back(std::move(full));
                return;
            }
            if (r > len + k) return;
            for (int add = 0; add <= 1; ++add) {
                const int v = lambda.row(r) + add;
                if (r > len && add == 0) continue;
                if (!rho.empty() && v > rho.back()) continue;
                rho.push_back(v);
                rec(r + 1, left - add);
                rho.pop_back();
            }
        };
        rec(1, k);
    }
    sort_unique(out);
    return out;
}

std::vector<Partition> strip_removals(const Partition& mu, int k, Strip kind)
{
    if (k < 0) throw DomainError("strip size must be nonnegative");
    std::vector<Partition> out;
    const int len = mu.length();
    std::vector<int> lam;
    std::function<void(int, int)> rec = [&](int r, int left) {
        if (r > len) {
            if (left == 0) out.emplace_back(lam);
            return;
        }
        int lo = 0;
        const int hi = mu.row(r);
        if (kind == Strip::horizontal) {
            lo = std::max(mu.row(r + 1), hi - left);
        } else {
            lo = std::max(0, hi - std::min(1, left));
        }
        for (int v = hi; v >= lo; --v) {
            if (!lam.empty() && v > lam.back()) continue;
            lam.push_back(v);
            rec(r + 1, left - (hi - v));
            lam.pop_back();
        }
    };
    rec(1, k);
    sort_unique(out);
    return out;
}

std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner)
{
    std::vector<Cell> out;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.row(r) + 1; c <= outer.row(r); ++c) out.push_back({r, c});
    return out;
}

std::vector<Cell> border_walk(const Partition& mu)
{
    std::vector<Cell> out;
    for (int r = 1; r <= mu.length(); ++r) {
        const int stop = std::max(mu.row(r + 1), 1);
        for (int c = mu.row(r); c >= stop; --c) out.push_back({r, c});
    }
    return out;
}

int snake_height(const Partition& mu, int k)
{
    const auto walk = border_walk(mu);
    if (k < 1 || k > static_cast<int>(walk.size()))
        throw DomainError("snake length " + std::to_string(k) + " outside border of " + mu.pretty());
    return walk[static_cast<std::size_t>(k - 1)].row;
}

std::optional<Partition> drop_snake(const Partition& mu, int k)
{
    if (k == 0) return mu;
    const auto walk = border_walk(mu);
    if (k < 0 || k > static_cast<int>(walk.size())) return std::nullopt;
    std::vector<int> rows = mu.parts();
    for (int i = 0; i < k; ++i) --rows[static_cast<std::size_t>(walk[static_cast<std::size_t>(i)].row - 1)];
    // The walk removes rightmost cells of each row, so only monotonicity can fail.
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] > rows[i - 1]) return std::nullopt;
    return Partition(std::move(rows));
}

std::optional<Partition> add_snake(const Partition& rho, int k, int h)
{
    if (h < 1 || k < h) return std::nullopt;
    std::vector<int> rows;
    rows.push_back(rho.row(h) + k - h + 1);
    for (int r = 1; r <= h - 1; ++r) rows.push_back(rho.row(r) + 1);
    for (int r = h + 1; r <= rho.length(); ++r) rows.push_back(rho.row(r));
    if (!is_weakly_decreasing(rows)) return std::nullopt;
    Partition lambda(std::move(rows));
    auto back = drop_snake(lambda, k);
    if (!back || *back != rho || snake_height(lambda, k) != h) return std::nullopt;
    return lambda;
}

Partition snake_involution(const Partition& lambda, int n, const Partition& rho)
{
    if (!is_strip(rho, lambda, Strip::horizontal) || rho.size() - lambda.size() != n)
        throw DomainError("snake_involution: rho/lambda must be a horizontal strip of size n");
    auto core = drop_snake(rho, n);
    if (!core) throw DomainError("snake_involution: rho has no removable n-snake");
    if (*core == lambda) throw DomainError("snake_involution: lambda equals the snake-removed core");
    const int h = snake_height(rho, n);
    const int target = lambda.row(h) > core->row(h) ? h + 1 : h - 1;
    auto out = add_snake(*core, n, target);
    if (!out) throw DomainError("snake_involution: no snake of height " + std::to_string(target));
    return *out;
}

std::vector<Partition> partitions_of(int n)
{
    if (n < 0) throw DomainError("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out; // generated in reverse-lexicographic order already
}

bool dominance_leq(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size()) return false;
    int sl = 0, sm = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int r = 1; r <= len; ++r) {
        sl += lambda.row(r);
        sm += mu.row(r);
        if (sl > sm) return false;
    }
    return true;
}

std::vector<Partition> linear_extension(int n)
{
    auto out = partitions_of(n);
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace qtk
