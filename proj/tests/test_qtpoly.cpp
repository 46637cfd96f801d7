#include "helpers.hpp"

#include "qtk/error.hpp"

#include <doctest.h>

#include <random>

using namespace qtk;
using namespace qtk::test;

namespace {

QTPoly random_poly(std::mt19937_64& rng)
{
    QTPoly p;
    const int terms = static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i)
        p.add_term(static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<long>(rng() % 7) - 3);
    return p;
}

} // namespace

TEST_CASE("ring operations")
{
    CHECK((1 + q) * (1 + t) == 1 + q + t + q * t);
    CHECK((1 - t) * (1 + t + t * t) == 1 - t.pow(3));
    const QTPoly p = 2 * q - t.pow(2);
    CHECK(p + QTPoly() == p);
    CHECK((p - p).is_zero());
    CHECK(p.scale(3) == 6 * q - 3 * t.pow(2));
    CHECK(p.shift(1, 2) == 2 * q.pow(2) * t.pow(2) - q * t.pow(4));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const QTPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("no zero coefficients are stored")
{
    QTPoly p = q + t;
    p.add_term(1, 0, -1);
    CHECK(p == t);
    CHECK(p.terms().size() == 1);
    CHECK(QTPoly(0).is_zero());
}

TEST_CASE("evaluation")
{
    CHECK((1 + q * t).eval(2, 3) == 7);
    CHECK(q.pow(3).eval(QTRational(1, 2), 5) == QTRational(1, 8));
    CHECK(QTPoly().eval(3, 4) == 0);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const QTPoly a = random_poly(rng), b = random_poly(rng);
        const QTRational x(static_cast<long>(rng() % 9) - 4, 3), y(static_cast<long>(rng() % 9) + 1, 7);
        CHECK((a * b).eval(x, y) == a.eval(x, y) * b.eval(x, y));
    }
}

TEST_CASE("reverse and swap")
{
    CHECK(reverse(q + t, 1, 1) == t + q);
    CHECK(reverse(1 + q * t.pow(2), 1, 2) == q * t.pow(2) + 1);
    CHECK(reverse(q.pow(3), 6, 0) == q.pow(3));
    CHECK_THROWS_AS((void)reverse(q.pow(3), 2, 0), DomainError);
    CHECK(swap_qt(q + t.pow(2)) == t + q.pow(2));

    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const QTPoly a = random_poly(rng);
        CHECK(reverse(reverse(a, 3, 3), 3, 3) == a);
        CHECK(swap_qt(swap_qt(a)) == a);
    }
}

TEST_CASE("positivity and printing")
{
    CHECK(is_nonnegative(1 + q * t));
    CHECK_FALSE(is_nonnegative(t + q * t.pow(3) - q * t.pow(2)));
    CHECK((1 + q * t).to_string() == "1+q*t");
    CHECK((2 * q.pow(3) * t - t.pow(2)).to_string() == "-t^2+2*q^3*t");
    CHECK(QTPoly().to_string() == "0");
    CHECK((1 + q * t).to_latex() == "1+qt");
    CHECK((q.pow(2) * t).to_latex() == "q^{2}t");
}

TEST_CASE("t-binomials")
{
    CHECK(gaussian_binomial_t(2, 1) == 1 + t);
    CHECK(gaussian_binomial_t(4, 2) == 1 + t + 2 * t.pow(2) + t.pow(3) + t.pow(4));
    CHECK(gaussian_binomial_t(5, 0) == 1);
}
