#include "helpers.hpp"

#include "qtk/error.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qtk;
using namespace qtk::test;

TEST_CASE("parse and print")
{
    CHECK(P("5,4,2,2,1").parts() == std::vector<int>{5, 4, 2, 2, 1});
    CHECK(P("").empty());
    CHECK(P("3,1").pretty() == "(3,1)");
    CHECK(P("3,1")[5] == 0);
    CHECK_THROWS_AS((void)P("1,3"), ParseError);
    CHECK_THROWS_AS((void)P("2,x"), ParseError);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(P("5,4,2,2,1")) == P("5,4,2,2,1"));
    CHECK(conjugate(P("3,1")) == P("2,1,1"));
    CHECK(conjugate(Partition{}) == Partition{});
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n)) CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("arm, leg and n")
{
    CHECK(arm_leg(P("3,2"), {1, 1}) == std::pair{2, 1});
    CHECK(arm_leg(P("1"), {1, 1}) == std::pair{0, 0});
    CHECK(arm_leg(P("2,2"), {2, 2}) == std::pair{0, 0});
    CHECK(n_stat(P("2,1")) == 1);
    CHECK(n_stat(P("1,1,1")) == 3);
    CHECK(n_stat(P("6")) == 0);
}

TEST_CASE("strips")
{
    CHECK(strip_extensions(P("1"), 2, Strip::horizontal) == std::vector<Partition>{P("3"), P("2,1")});
    auto vert = strip_extensions(P("1"), 2, Strip::vertical);
    std::sort(vert.begin(), vert.end());
    CHECK(vert == std::vector<Partition>{P("1,1,1"), P("2,1")});
    CHECK(strip_extensions(P("2,2"), 0, Strip::horizontal) == std::vector<Partition>{P("2,2")});

    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            for (int k = 0; k <= 3; ++k) {
                auto h = strip_extensions(lambda, k, Strip::horizontal);
                std::vector<Partition> via;
                for (const auto& rho : strip_extensions(conjugate(lambda), k, Strip::vertical))
                    via.push_back(conjugate(rho));
                std::sort(h.begin(), h.end());
                std::sort(via.begin(), via.end());
                CHECK(h == via);
            }
            // One-cell extensions are the addable corners.
            int corners = 1;
            for (int r = 2; r <= lambda.length() + 1; ++r)
                if (lambda.row(r) < lambda.row(r - 1)) ++corners;
            CHECK(strip_extensions(lambda, 1, Strip::horizontal).size() == static_cast<std::size_t>(corners));
        }
}

TEST_CASE("snakes")
{
    CHECK(snake_height(P("5,4,2,2,1"), 4) == 2);
    CHECK(snake_height(P("7"), 1) == 1);
    CHECK(snake_height(P("12,5,5"), 10) == 3);

    CHECK(drop_snake(P("5,4,2,2,1"), 4) == P("3,2,2,2,1"));
    CHECK_FALSE(drop_snake(P("5,4,2,2,1"), 5).has_value());
    CHECK(drop_snake(P("12,5,5"), 10) == P("4,4,4"));

    CHECK(add_snake(P("4,4,4"), 10, 2) == P("13,5,4"));
    CHECK(add_snake(P("3,2,2,2,1"), 4, 2) == P("5,4,2,2,1"));
    CHECK(add_snake(Partition{}, 3, 1) == P("3"));

    CHECK(snake_involution(P("5,5,2"), 10, P("12,5,5")) == P("13,5,4"));
    CHECK(snake_involution(P("5,5,2"), 10, P("13,5,4")) == P("12,5,5"));
    CHECK(snake_involution(P("4,2,1"), 5, P("8,3,1")) == P("7,4,1"));
}

TEST_CASE("drop_snake and add_snake invert each other")
{
    for (int n = 1; n <= 10; ++n)
        for (const auto& mu : partitions_of(n))
            for (int k = 1; k <= static_cast<int>(border_walk(mu).size()); ++k)
                if (auto rho = drop_snake(mu, k)) CHECK(add_snake(*rho, k, snake_height(mu, k)) == mu);
}

TEST_CASE("partition lattice")
{
    CHECK(partitions_of(3) == std::vector<Partition>{P("3"), P("2,1"), P("1,1,1")});
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(8).size() == 22);
    CHECK(dominance_leq(P("1,1,1"), P("3")));
    CHECK_FALSE(dominance_leq(P("3,1"), P("2,2")));
    CHECK_FALSE(dominance_leq(P("3,1,1,1"), P("2,2,2")));
    CHECK_FALSE(dominance_leq(P("2,2,2"), P("3,1,1,1")));

    for (int n = 1; n <= 7; ++n) {
        const auto order = linear_extension(n);
        CHECK(order.size() == partitions_of(n).size());
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j) CHECK_FALSE(dominance_leq(order[j], order[i]));
    }
}
