#include "helpers.hpp"

#include "qtk/error.hpp"
#include "qtk/oracle.hpp"

#include <doctest.h>

using namespace qtk;
using namespace qtk::test;

TEST_CASE("Pieri rules and their adjoints")
{
    CHECK(mul_h(1, s("1")) == s("2") + s("1,1"));
    CHECK(mul_e(2, s("2")) == s("3,1") + s("2,1,1"));
    CHECK(mul_h(2, s("1,1")) == s("3,1") + s("2,1,1"));
    CHECK(skew_e(1, s("2")) == s("1"));
    CHECK(skew_e(2, s("2")).is_zero());
    CHECK(skew_h(2, s("2,1")) == s("1"));

    for (int n = 0; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int k = 1; k <= 3; ++k)
                for (const auto& mu : partitions_of(n + k)) {
                    CHECK(hall_pairing(skew_h(k, schur(mu)), schur(lambda)) ==
                          hall_pairing(schur(mu), mul_h(k, schur(lambda))));
                    CHECK(hall_pairing(skew_e(k, schur(mu)), schur(lambda)) ==
                          hall_pairing(schur(mu), mul_e(k, schur(lambda))));
                }
}

TEST_CASE("Bernstein operators")
{
    CHECK(bernstein_S(2, s("1")) == s("2,1"));
    CHECK(bernstein_S(3, one()) == s("3"));
    CHECK(bernstein_S(1, s("2")).is_zero());
    for (int n = 0; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int m = lambda.row(1); m <= 5; ++m) {
                std::vector<int> parts{m};
                parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
                CHECK(bernstein_S(m, schur(lambda)) == schur(Partition(parts)));
            }
}

TEST_CASE("Hall-Littlewood vertex operators")
{
    CHECK(hl_vertex_H(2, s("1")) == s("2,1") + t * s("3"));
    CHECK(hl_vertex_H(2, s("2")) == s("2,2") + t * s("3,1") + t.pow(2) * s("4"));
    CHECK(hl_vertex_H(3, one()) == s("3"));
    CHECK(hl_vertex_H_snake(2, 0, s("1")) == s("2,1") + t * s("3"));
    CHECK(hl_vertex_H_snake(2, 1, s("1")) == s("2,1") + t * s("3"));
    CHECK(hl_vertex_H_snake(3, 0, one()) == s("3"));
    CHECK(hl_vertex_Hbar(2, s("1")) == t * s("2,1") + s("1,1,1"));
    CHECK(hl_vertex_Hbar(2, one()) == s("1,1"));
    CHECK(hl_vertex_Hbar(3, one()) == s("1,1,1"));
}

TEST_CASE("snake rule does not depend on k")
{
    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int m = 2; m <= 4; ++m)
                for (int k = std::max(0, lambda.row(1) - m); k <= 6; ++k)
                    CHECK(hl_vertex_H_snake(m, k, schur(lambda)) == hl_vertex_H(m, schur(lambda)));
}

TEST_CASE("iterated vertex operators give the charge expansion")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            SchurExpansion f = one();
            for (int i = mu.length(); i >= 1; --i) f = hl_vertex_H(mu.row(i), f);
            SchurExpansion by_charge;
            for (const auto& X : enumerate_cst(mu)) by_charge.add(X.shape(), t.pow(charge(X)));
            CHECK(f == by_charge);
        }
}

TEST_CASE("bar-H agrees with its omega conjugation formula at rational points")
{
    // bar-H_m = omega o (H_m with t reversed) o omega o R^t, compared after specialising t.
    const auto points = draw_points(17, 3, 12);
    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int m = 1; m <= 3; ++m) {
                const SchurExpansion lhs = hl_vertex_Hbar(m, schur(lambda));
                const SchurExpansion inner = hl_vertex_H(m, omega(schur(lambda)));
                for (const auto& p : points) {
                    NumericSchur want;
                    const QTRational tn = [&] {
                        QTRational r = 1;
                        for (int i = 0; i < n; ++i) r *= p.t;
                        return r;
                    }();
                    // Substitute t -> 1/t in H_m and rescale by t^n: the grading of R^t.
                    for (const auto& [mu, c] : inner.terms()) {
                        QTRational v = 0;
                        for (const auto& [k, a] : c.terms()) {
                            QTRational tk = 1;
                            for (int i = 0; i < k.second; ++i) tk /= p.t;
                            v += QTRational(a) * tk;
                        }
                        want.add(conjugate(mu), tn * v);
                    }
                    CHECK(evaluate(lhs, p) == want);
                }
            }
}

TEST_CASE("omega, grading and mixed degrees")
{
    CHECK(omega(s("3,1")) == s("2,1,1"));
    CHECK(grade_Rt(s("2,1")) == t.pow(3) * s("2,1"));
    CHECK_THROWS_AS((void)hl_vertex_Hbar(2, s("1") + s("2")), DomainError);
}
