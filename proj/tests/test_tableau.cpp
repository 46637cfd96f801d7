#include "helpers.hpp"

#include "qtk/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace qtk;
using namespace qtk::test;

namespace {

Word W(std::string_view text) { return parse_word(text); }

// Random word whose content is a random partition of n.
Word random_content_word(std::mt19937_64& rng, int n)
{
    const auto parts = partitions_of(n);
    const Partition mu = parts[rng() % parts.size()];
    Word w;
    for (int i = 1; i <= mu.length(); ++i) w.insert(w.end(), static_cast<std::size_t>(mu.row(i)), i);
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

std::vector<Word> standard_words(int n)
{
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace

TEST_CASE("tableau text and validation")
{
    const Tableau X = T("1,3,5,6/2,4");
    CHECK(X.shape() == P("4,2"));
    CHECK(X.at({2, 1}) == 2);
    CHECK(X.to_string() == "1,3,5,6/2,4");
    CHECK(X.is_standard());
    CHECK(T("").empty());
    CHECK_THROWS((void)T("2/1"));
    CHECK_THROWS((void)T("1/2,3"));
    CHECK_FALSE(T("1,1/2").is_standard());
}

TEST_CASE("reading words")
{
    CHECK(word_to_string(reading_word(T("1,1,1,2,4,8/2,2,3,5/3,4,6/7"))) == "73462235111248");
    CHECK(word_to_string(reading_word(T("1,2,3"))) == "123");
    CHECK(word_to_string(reading_word(T("1/2/3"))) == "321");
    CHECK(parse_word("10,2,1") == Word{10, 2, 1});
    CHECK_THROWS_AS((void)parse_word("12a"), ParseError);
}

TEST_CASE("standard subwords and charge")
{
    CHECK(standard_subwords(W("73462235111248")) == std::vector<Word>{W("73625148"), W("4231"), W("12")});
    CHECK(standard_subwords(W("11")) == std::vector<Word>{W("1"), W("1")});
    CHECK(standard_subwords(W("2112")) == std::vector<Word>{W("21"), W("12")});
    CHECK(charge(W("73462235111248")) == 9);
    CHECK(charge(W("4231")) == 2);
    CHECK(charge(W("73625148")) == 6);
    CHECK(charge(W("54321")) == 0);
    CHECK(charge(Word{}) == 0);
    CHECK(charge(T("1,1,1,2,4,8/2,2,3,5/3,4,6/7")) == 9);
}

TEST_CASE("insertion")
{
    CHECK(row_insert(T("4,5/6"), 3) == T("3,5/4/6"));
    CHECK(row_insert(Tableau{}, 5) == T("5"));
    CHECK(row_insert(T("2,3"), 1) == T("1,3/2"));
    // Column insertion is row insertion conjugated by transpose.
    CHECK(column_insert(T("2,3"), 1) == T("1,2,3"));
    CHECK(column_insert(T("1,3/2"), 4) == T("1,3/2/4"));

    CHECK(reverse_row_insert(T("3,5/4/6"), {3, 1}) == std::pair{T("4,5/6"), 3});
    CHECK(reverse_row_insert(T("5"), {1, 1}) == std::pair{Tableau{}, 5});

    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const auto all = enumerate_syt(n);
        const Tableau X = all[rng() % all.size()];
        const int x = static_cast<int>(rng() % static_cast<unsigned>(n + 1)) + 1;
        // x may repeat a label; the tableau is then only column strict.
        const Tableau grown = row_insert(X, x);
        const Partition before = X.shape();
        Cell corner{};
        for (const auto& c : skew_cells(grown.shape(), before)) corner = c;
        const auto [back, ejected] = reverse_row_insert(grown, corner);
        CHECK(back == X);
        CHECK(ejected == x);

        const Tableau cgrown = column_insert(X, x);
        for (const auto& c : skew_cells(cgrown.shape(), before)) corner = c;
        const auto [cback, cej] = reverse_column_insert(cgrown, corner);
        CHECK(cback == X);
        CHECK(cej == x);
    }
}

TEST_CASE("rectification and conjugation")
{
    CHECK(rectify(W("21")) == T("1/2"));
    CHECK(rectify(W("312")) == T("1,2/3"));
    const Tableau R = rectify(W("73625148"));
    CHECK(knuth_equivalent(reading_word(R), W("73625148")));
    CHECK(charge(R) == 6);

    CHECK(conjugate_tableau(T("1,2")) == T("1/2"));
    CHECK(conjugate_tableau(T("1/2/3")) == T("1,2,3"));
    CHECK(conjugate_tableau(T("1,3/2")) == T("1,2/3"));
}

TEST_CASE("enumeration")
{
    CHECK(enumerate_syt(3).size() == 4);
    CHECK(enumerate_syt(0) == std::vector<Tableau>{Tableau{}});
    CHECK(enumerate_syt(P("3,2,1")).size() == 16);
    const auto cst = enumerate_cst(P("2,1"));
    CHECK(cst.size() == 2);
    CHECK(enumerate_cst(P("3"), P("2,1")) == std::vector<Tableau>{T("1,1,2")});
    CHECK(enumerate_cst(P("1,1"), P("2")).empty());
    for (const auto& X : enumerate_syt(6)) CHECK(X.is_standard());
}

TEST_CASE("charge is constant on Knuth classes")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        const Word w = random_content_word(rng, 1 + static_cast<int>(rng() % 8));
        CHECK(charge(w) == charge(reading_word(rectify(w))));
    }
}

TEST_CASE("charge under rotation and reversal, and the conjugate tableau")
{
    for (int n = 1; n <= 7; ++n)
        for (const Word& w : standard_words(n)) {
            const auto one = std::find(w.begin(), w.end(), 1);
            Word rotated(one + 1, w.end());
            rotated.insert(rotated.end(), w.begin(), one);
            const int tail = static_cast<int>(w.end() - one - 1);
            CHECK(charge(w) == charge(shift_letters(rotated, -1)) + tail);

            Word rev(w.rbegin(), w.rend());
            CHECK(charge(w) + charge(rev) == n * (n - 1) / 2);
        }
    for (int n = 1; n <= 7; ++n)
        for (const auto& X : enumerate_syt(n)) {
            const Word r = reading_word(X);
            const Tableau C = rectify(Word(r.rbegin(), r.rend()));
            CHECK(C == conjugate_tableau(X));
            CHECK(C.shape() == conjugate(X.shape()));
        }
}

TEST_CASE("Knuth moves preserve the insertion tableau")
{
    for (const Word& w : standard_words(5))
        for (const Word& v : knuth_neighbours(w)) CHECK(rectify(v) == rectify(w));
}
