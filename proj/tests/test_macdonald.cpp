#include "helpers.hpp"

#include "qtk/error.hpp"
#include "qtk/json_io.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/oracle.hpp"

#include <doctest.h>

using namespace qtk;
using namespace qtk::test;

namespace {

std::vector<Partition> supported_up_to(int max_n)
{
    std::vector<Partition> out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : partitions_of(n))
            if (classify_shape(mu)) out.push_back(mu);
    return out;
}

} // namespace

TEST_CASE("shape classification")
{
    const auto s321 = classify_shape(P("3,2,1"));
    REQUIRE(s321);
    CHECK(s321->family == ShapeFamily::three_plus);
    CHECK(s321->a == 1);
    CHECK(s321->b == 1);
    CHECK_FALSE(s321->conjugated);

    const auto s43 = classify_shape(P("4,3"));
    REQUIRE(s43);
    CHECK(s43->conjugated);
    CHECK(s43->family == ShapeFamily::two_column);
    CHECK(s43->base() == P("2,2,2,1"));
    CHECK(s43->partition() == P("4,3"));

    CHECK_FALSE(classify_shape(P("3,3,2")));
    // Every partition of 8 but (3,3,2) has a route.
    int missing = 0;
    for (const auto& mu : partitions_of(8)) missing += classify_shape(mu) ? 0 : 1;
    CHECK(missing == 1);
    CHECK_FALSE(classify_shape(P("3,3,3")));
    CHECK(classify_shape(P("5,4")));  // conjugate of (2,2,2,2,1)

    try {
        (void)macdonald(P("3,3,2"));
        FAIL("expected UnsupportedShape");
    } catch (const UnsupportedShape& e) {
        CHECK(std::string(e.what()).find("(3,3,2)") != std::string::npos);
    }
}

TEST_CASE("small Macdonald polynomials")
{
    CHECK(H2qt(one()) == s("2") + q * s("1,1"));
    CHECK(H2qt(s("1")) == t * s("3") + (1 + q * t) * s("2,1") + q * s("1,1,1"));
    CHECK(H2qt(macdonald(P("2"))) == t.pow(2) * s("4") + (t + q * t + q * t.pow(2)) * s("3,1") +
                                         (1 + q.pow(2) * t.pow(2)) * s("2,2") +
                                         (q + q * t + q.pow(2) * t) * s("2,1,1") + q.pow(2) * s("1,1,1,1"));
    CHECK(H3qt(one()) == s("3") + (q + q.pow(2)) * s("2,1") + q.pow(3) * s("1,1,1"));
    CHECK(H4qt(one()) == s("4") + (q + q.pow(2) + q.pow(3)) * s("3,1") + (q.pow(2) + q.pow(4)) * s("2,2") +
                             (q.pow(3) + q.pow(4) + q.pow(5)) * s("2,1,1") + q.pow(6) * s("1,1,1,1"));
    CHECK(macdonald(P("2,1")) == t * s("3") + (1 + q * t) * s("2,1") + q * s("1,1,1"));
    CHECK(macdonald(P("1,1,1")) == t.pow(3) * s("3") + (t + t.pow(2)) * s("2,1") + s("1,1,1"));
    CHECK(macdonald(P("2,2")) == H2qt(macdonald(P("2"))));
}

TEST_CASE("operator forms agree")
{
    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CHECK(H3qt(schur(lambda)) == H3qt_factored(schur(lambda)));
            CHECK(H4qt(schur(lambda)) == H4qt_factored(schur(lambda)));
        }
    // The middle form with the printed minus sign is off already on 1.
    CHECK(H4qt_middle_form_as_printed(one()).coeff(P("4")) == 1 - 2 * q + 2 * q.pow(3));
}

TEST_CASE("head components reassemble the vertex operators")
{
    CHECK(component_HS(T("1,2,3"), one()) == s("3"));
    CHECK(component_HS(T("1,3/2"), one()) == s("2,1"));
    for (int m : {3, 4})
        for (int n = 0; n <= 4; ++n)
            for (const auto& lambda : partitions_of(n)) {
                SchurExpansion sum;
                for (const auto& g : head_groups(m)) sum += q.pow(g.gamma) * g.op(schur(lambda));
                CHECK(sum == (m == 3 ? H3qt(schur(lambda)) : H4qt(schur(lambda))));
            }
    CHECK_THROWS((void)component_HS(T("1,2"), one()));
}

TEST_CASE("Kostka coefficients")
{
    CHECK(kostka(P("3"), P("2,1")) == t);
    CHECK(kostka(P("1,1,1,1"), P("4")) == q.pow(6));
    CHECK_THROWS_AS((void)kostka(P("5"), P("2,1")), DomainError);

    for (const auto& mu : supported_up_to(8)) {
        const int n = mu.size();
        const SchurExpansion H = macdonald(mu);
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        CHECK(H.coeff(Partition(ones)) == q.pow(n_stat(conjugate(mu))));
        CHECK(H.coeff(Partition{n}) == t.pow(n_stat(mu)));
        for (const auto& lambda : partitions_of(n)) {
            const QTPoly K = H.coeff(lambda);
            CHECK(is_nonnegative(K));
            CHECK(K == reverse(H.coeff(conjugate(lambda)), n_stat(conjugate(mu)), n_stat(mu)));
            CHECK(at_q_zero(K) == kostka_foulkes(lambda, mu));
            CHECK(K.eval(1, 1) == count_syt(lambda));
        }
    }
}

TEST_CASE("conjugate shapes are consistent")
{
    for (const auto& mu : supported_up_to(8))
        if (classify_shape(conjugate(mu))) CHECK(macdonald(conjugate(mu)) == omega(swap_qt(macdonald(mu))));
}

TEST_CASE("H1 raises a two-column shape")
{
    for (int a = 0; 2 * a <= 7; ++a)
        for (int b = 0; 2 * a + b + 1 <= 8; ++b) {
            if (a == 0 && b == 0) continue;
            std::vector<int> parts(static_cast<std::size_t>(a), 2);
            parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
            const Partition mu(parts);
            parts.push_back(1);
            const SchurExpansion raised = macdonald(Partition(parts));
            const SchurExpansion tilted =
                raised.map_coeffs([&](const QTPoly& c) { return tilt_t_by_q(c.shift(0, a), -1); });
            CHECK(hl_vertex_H(1, macdonald(mu)) == tilted);
        }
}

TEST_CASE("Hall-Littlewood and Stembridge expansions")
{
    CHECK(hall_littlewood(P("2,1")) == s("2,1") + t * s("3"));
    CHECK(stembridge_expansion(0, 3) == HLExpansion::basis(P("1,1,1")));
    CHECK(stembridge_expansion(1, 1) == HLExpansion::basis(P("1,1,1"), q) + HLExpansion::basis(P("2,1"), 1 - q * t.pow(2)));
    CHECK(stembridge_expansion(1, 0) == HLExpansion::basis(P("1,1"), q) + HLExpansion::basis(P("2"), 1 - q * t));
    CHECK(hl_to_schur(besteq_expansion(0, 0)) == H3qt(one()));
    for (int a = 0; 2 * a <= 8; ++a)
        for (int b = 0; 2 * a + b <= 8; ++b) {
            if (a == 0 && b == 0) continue;
            std::vector<int> parts(static_cast<std::size_t>(a), 2);
            parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
            CHECK(hl_to_schur(stembridge_expansion(a, b)) == macdonald(Partition(parts)));
        }
}

TEST_CASE("JSON round trips")
{
    const SchurExpansion H = macdonald(P("3,1,1"));
    CHECK(schur_from_json(to_json(H)) == H);
    const QTPoly p = 3 * q.pow(2) * t - 1;
    CHECK(qtpoly_from_json(to_json(p)) == p);
    CHECK(to_json(p).dump() == R"([[0,0,"-1"],[2,1,"3"]])");
    const HLExpansion E = stembridge_expansion(2, 1);
    CHECK(hl_from_json(to_json(E)) == E);
    CHECK(to_json(SchurExpansion{})["degree"].is_null());
}

TEST_CASE("identity suite")
{
    const Report r = hl_identity_suite(6);
    CHECK_FALSE(r.empty());
    for (const auto& c : r) CHECK_MESSAGE(c.pass, c.check << " " << c.params.dump() << " " << c.detail);
    CHECK_THROWS_AS((void)hl_identity_suite(10), DomainError);
}
