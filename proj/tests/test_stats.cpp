#include "helpers.hpp"

#include "qtk/error.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/stats.hpp"

#include <doctest.h>

using namespace qtk;
using namespace qtk::test;

namespace {

StatValues stats(std::string_view mu, std::string_view tab) { return stat_pair(require_supported(P(mu)), T(tab)); }

} // namespace

TEST_CASE("row and column blocks")
{
    CHECK(add_row_block(2, P("11,3"), T("1,3,5,6/2,4")) == T("1,2,4,6,7/3,5,8"));
    CHECK(add_row_block(2, P("8,3,1"), T("1,2,3/4/5")) == T("1,2,5,7/3,4/6"));
    CHECK(add_row_block(2, P("2"), Tableau{}) == T("1,2"));
    CHECK(add_col_block(2, P("4,3,1,1,1,1,1,1,1"), T("1,3,5,6/2,4")) == T("1,3,5,7/2,4,6/8"));
    CHECK(add_col_block(2, P("1,1"), Tableau{}) == T("1/2"));

    CHECK(remove_row_block(2, P("11,3"), T("1,2,4,6,7/3,5,8")) == T("1,3,5,6/2,4"));
    CHECK(remove_col_block(2, P("4,3,1,1,1,1,1,1,1"), T("1,3,5,7/2,4,6/8")) == T("1,3,5,6/2,4"));
}

TEST_CASE("block round trips and the charge formula")
{
    // rho runs over lambda plus a horizontal (row) or vertical (column) strip of n + m cells.
    for (int n = 0; n <= 5; ++n)
        for (const auto& X : enumerate_syt(n))
            for (int m = 2; m <= 4; ++m) {
                const Partition lam = X.shape();
                for (const auto& rho : strip_extensions(lam, n + m, Strip::horizontal)) {
                    const Tableau built = add_row_block(m, rho, X);
                    CHECK(built.is_standard());
                    CHECK(remove_row_block(m, rho, built) == X);
                    const int skew = lam.size() - remove_first_row(rho).size();
                    CHECK(charge(built) == charge(X) + skew + m * (m - 1) / 2 + (m - 1) * n);
                    for (int a = 0; 2 * a <= n; ++a) CHECK(type_two_col(unbuild(m, built), a) == type_two_col(X, a));
                }
                for (const auto& rho : strip_extensions(lam, n + m, Strip::vertical)) {
                    const Tableau built = add_col_block(m, rho, X);
                    CHECK(remove_col_block(m, rho, built) == X);
                    CHECK(built == transpose(add_row_block(m, conjugate(rho), transpose(X))));
                }
            }
}

TEST_CASE("unbuild and delete_prefix")
{
    CHECK(unbuild(2, T("1,4,5/2,6/3")) == T("1,3/2/4"));
    CHECK(unbuild(2, T("1,3/2/4")) == T("1,2"));
    CHECK(unbuild(3, T("1,2,3")) == Tableau{});
    CHECK(delete_prefix(1, T("1,2,4/3")) == T("1,3/2"));
    CHECK(delete_prefix(2, T("1,2/3,4")) == T("1,2"));
    CHECK(delete_prefix(0, T("1,3/2")) == T("1,3/2"));
}

TEST_CASE("types")
{
    CHECK(type_two_col(T("1,4,5/2,6/3"), 3).to_string() == "V,V,H");
    CHECK(type_two_col(T("1,2"), 1).to_string() == "H");
    const TypeSequence ts = TypeSequence::parse("(1,3/2)|V,H,S");
    CHECK(ts.head == T("1,3/2"));
    CHECK(ts.to_string() == "(1,3/2)|V,H,S");
    CHECK(TypeSequence::parse("V,S").to_string() == "V,S");
}

TEST_CASE("statistic pairs")
{
    CHECK(stats("2,1", "1,3/2") == StatValues{1, 1});
    CHECK(stats("3", "1,2,3") == StatValues{0, 0});
    CHECK(stats("3", "1,2/3") == StatValues{0, 2});
    // (3,3) is only reachable as the conjugate of (2,2,2).
    CHECK_THROWS_AS((void)stats("3,3", "1,2,3/4,5,6"), DomainError);
}

TEST_CASE("size 3 heads use the corrected alpha")
{
    // Heads 2 over (1,3) and its conjugate; the other two keep the table values.
    CHECK(stat_entry(T("1,3/2")).alpha == 1);
    CHECK(stat_entry(T("1,2/3")).alpha == 2);
    CHECK(stat_table(3).size() == 4);
    CHECK(stat_table(4).size() == 10);
}

TEST_CASE("generating functions reproduce H_mu")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            if (classify_shape(mu)) CHECK(stat_genfun(mu) == macdonald(mu));
}

TEST_CASE("components")
{
    for (int m : {3, 4})
        for (int a = 0; 2 * a + m <= 7; ++a)
            for (int b = 0; 2 * a + b + m <= 7; ++b) {
                std::vector<int> parts{m};
                parts.insert(parts.end(), static_cast<std::size_t>(a), 2);
                parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
                const SupportedShape shape = require_supported(Partition(parts));
                std::vector<int> two(static_cast<std::size_t>(a), 2);
                two.insert(two.end(), static_cast<std::size_t>(b), 1);
                const SchurExpansion base = macdonald(Partition(two));
                for (const auto& g : head_groups(m)) CHECK(stat_component(shape, g) == g.op(base));
            }
}

TEST_CASE("pair classification and the involution")
{
    CHECK(classify_pair(5, 2, T("1,2,3/4/5"), P("8,3,1")) == PairClass::unstable);
    const auto [hat, rho] = pair_involution(5, 2, T("1,2,3/4/5"), P("8,3,1"));
    CHECK(hat == T("1,2,3,5/4"));
    CHECK(rho == P("7,4,1"));
    CHECK(pair_involution(5, 2, hat, rho) == std::pair{T("1,2,3/4/5"), P("8,3,1")});
    // Pairs whose rho has no n-snake removal are immaterial.
    int immaterial = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& X : enumerate_syt(n))
            for (const auto& r : strip_extensions(X.shape(), n + 2, Strip::horizontal))
                if (!drop_snake(r, n)) {
                    CHECK(classify_pair(n, 2, X, r) == PairClass::immaterial);
                    ++immaterial;
                }
    CHECK(immaterial > 0);
    CHECK(to_string(PairClass::stable) == "stable");
}

TEST_CASE("unimodal profiles")
{
    const auto two = unimodal_profile(require_supported(P("2")));
    CHECK(two.size() == 2);
    for (const auto& c : two) CHECK(c.unimodal);

    const auto p3111 = unimodal_profile(require_supported(P("3,1,1,1")));
    REQUIRE(p3111.size() == 4);
    CHECK(p3111[0].type.to_string() == "(1,2,3)|S,S,S");
    CHECK(p3111[0].counts == std::vector<long>{1, 2, 3, 4, 2, 1, 1});

    const auto p411 = unimodal_profile(require_supported(P("4,1,1")));
    REQUIRE(p411.size() == 10);
    CHECK(p411.back().type.to_string() == "(1/2/3/4)|S,S");
    CHECK(p411.back().counts == std::vector<long>{1, 1, 2, 1});

    CHECK(is_unimodal({0, 0, 1, 3, 2, 2, 1}));
    CHECK_FALSE(is_unimodal({1, 2, 1, 2}));
    CHECK(is_unimodal({}));
}
