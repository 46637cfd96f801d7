#include "helpers.hpp"

#include "qtk/battery.hpp"
#include "qtk/error.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qtk;
using namespace qtk::test;

namespace {

PowerExpansion p_of(std::string_view rho)
{
    PowerExpansion f;
    f.terms.emplace(P(rho), QTRational(1));
    return f;
}

} // namespace

TEST_CASE("characters and power sums")
{
    CHECK(mn_character(P("2,1"), P("1,1,1")) == 2);
    CHECK(mn_character(P("2,1"), P("3")) == -1);
    CHECK(mn_character(P("3,2"), P("2,2,1")) == 1);
    CHECK(z_rho(P("2,1,1")) == 4);
    CHECK(schur_to_power(P("1")).terms == RationalCoeffs{{P("1"), 1}});
    CHECK(schur_to_power(P("2")).terms == RationalCoeffs{{P("1,1"), QTRational(1, 2)}, {P("2"), QTRational(1, 2)}});
    CHECK(schur_to_power(P("1,1")).terms == RationalCoeffs{{P("1,1"), QTRational(1, 2)}, {P("2"), QTRational(-1, 2)}});
    // Column orthogonality: sum over lambda of chi^2 is z_rho.
    for (const auto& rho : partitions_of(6)) {
        mpz_class sum = 0;
        for (const auto& lambda : partitions_of(6)) sum += mn_character(lambda, rho) * mn_character(lambda, rho);
        CHECK(sum == z_rho(rho));
    }
}

TEST_CASE("scalar products")
{
    const QTPoint p{QTRational(1, 3), QTRational(2, 5)};
    CHECK(scalar_qt(p_of("1"), p_of("1"), p) == (1 - p.q) / (1 - p.t));
    CHECK(scalar_qt(p_of("2"), p_of("1,1"), p) == 0);
    CHECK(scalar_t(p_of("1,1"), p_of("1,1"), p.t) == 2 / ((1 - p.t) * (1 - p.t)));
    CHECK_THROWS_AS((void)scalar_t(p_of("2"), p_of("2"), QTRational(-1)), DegeneratePoint);
}

TEST_CASE("Gram-Schmidt oracle")
{
    const auto points = draw_points(99, 2, 12);
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            if (!classify_shape(mu)) continue;
            const SchurExpansion H = macdonald(mu);
            for (const auto& p : points) CHECK(macdonald_oracle(mu, p) == evaluate(H, p));
        }
    CHECK(kostka_oracle(P("3"), P("2,1"), points[0]) == points[0].t);

    // A different extension of dominance gives the same J at n = 6.
    auto order = partitions_of(6);
    std::stable_sort(order.begin(), order.end(),
                     [](const Partition& a, const Partition& b) { return n_stat(a) > n_stat(b); });
    CHECK(order != linear_extension(6));
    CHECK(macdonald_oracle_J(P("3,2,1"), points[0], order) == macdonald_oracle_J(P("3,2,1"), points[0]));

    auto bad = linear_extension(4);
    std::reverse(bad.begin(), bad.end());
    CHECK_THROWS_AS((void)macdonald_oracle_J(P("2,2"), points[0], bad), DomainError);
}

TEST_CASE("Kostka-Foulkes and SYT counts")
{
    CHECK(kostka_foulkes(P("3"), P("2,1")) == t);
    CHECK(kostka_foulkes(P("2,2"), P("2,2")) == 1);
    CHECK(kostka_foulkes(P("1,1"), P("2")).is_zero());
    CHECK(kostka_foulkes(P("4"), P("1,1,1,1")) == t.pow(6));
    CHECK(count_syt(P("2,1")) == 2);
    CHECK(count_syt(P("5")) == 1);
    CHECK(count_syt(P("2,2")) == 2);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n)) CHECK(count_syt_hook(lambda) == count_syt_enumerated(lambda));
}

TEST_CASE("rational points")
{
    const auto a = draw_points(5, 4, 8), b = draw_points(5, 4, 8);
    REQUIRE(a.size() == 4);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].q == b[i].q);
        CHECK(a[i].t == b[i].t);
        CHECK(a[i].q > 0);
        CHECK(a[i].q < 1);
        CHECK(a[i].q.get_den() <= 97);
    }
}

TEST_CASE("rational coefficient identities")
{
    for (const auto& r : verify_rational_props(0, 0, draw_points(1, 3, 16))) CHECK_MESSAGE(r.pass, r.check << r.detail);
    for (const auto& r : verify_rational_props(1, 2, draw_points(4, 2, 16))) CHECK_MESSAGE(r.pass, r.check << r.detail);
    CHECK_THROWS_AS((void)verify_rational_props(0, 0, {{QTRational(1, 2), QTRational(-1)}}), DegeneratePoint);
}

TEST_CASE("battery bounds and small runs")
{
    BatteryOptions small;
    small.max_n = 3;
    small.oracle_degree = 3;
    small.points = 1;
    const Report r = run_battery(small);
    CHECK_FALSE(r.empty());
    CHECK(all_pass(r));

    BatteryOptions empty;
    empty.max_n = 0;
    empty.oracle_degree = 0;
    CHECK(run_battery(empty).empty());

    BatteryOptions big;
    big.max_n = 12;
    CHECK_THROWS_AS((void)run_battery(big), DomainError);
    big.max_n = 8;
    big.oracle_degree = 7;
    CHECK_THROWS_AS((void)run_battery(big), DomainError);
}

TEST_CASE("report serialisation")
{
    Report r{{"b", {{"n", 2}}, true, "ok"}, {"a", {{"n", 1}}, false, "bad"}};
    sort_report(r);
    CHECK(r.front().check == "a");
    CHECK_FALSE(all_pass(r));
    const Report back = report_from_json(to_json(r));
    REQUIRE(back.size() == 2);
    CHECK(back[0].check == "a");
    CHECK(back[1].params == nlohmann::json{{"n", 2}});
    CHECK(back[1].pass);
}
